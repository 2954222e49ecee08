#pragma once

#include "jfilt/errors.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jfilt {

enum class AlphabetKind { full, yOnly, xOnly };

/// Generators of F (full: x_1..x_g, y_1..y_g), F' (y_1..y_g) or F'' (x_1..x_g).
/// Generator indices are 0-based: for the full alphabet x_i is i-1 and y_i is
/// g+i-1, so generator order is x_1 < ... < x_g < y_1 < ... < y_g.
class Alphabet {
public:
    Alphabet(int genus, AlphabetKind kind);

    int genus() const { return genus_; }
    AlphabetKind kind() const { return kind_; }
    int size() const { return kind_ == AlphabetKind::full ? 2 * genus_ : genus_; }

    int x(int i) const;  // 1-based handle index
    int y(int i) const;
    bool has_x() const { return kind_ != AlphabetKind::yOnly; }
    bool has_y() const { return kind_ != AlphabetKind::xOnly; }
    bool is_x(int gen) const;

    // 1-based handle index of a generator.
    int handle(int gen) const;
    std::string name(int gen) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    int genus_;
    AlphabetKind kind_;
};

struct Letter {
    int gen;
    std::int64_t exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group.
class GroupWord {
public:
    explicit GroupWord(Alphabet alphabet) : alphabet_(alphabet) {}

    // Reduces the raw letter sequence; throws ValidationError on a bad index.
    static GroupWord reduce(Alphabet alphabet, const std::vector<Letter>& raw);
    static GroupWord generator(Alphabet alphabet, int gen, std::int64_t exp = 1);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Total number of letters counted with multiplicity.
    std::int64_t length() const;

    // Exponent sum of every generator.
    std::vector<std::int64_t> abelianization() const;

    std::string str() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);
GroupWord power(const GroupWord& u, std::int64_t e);
// [u,v] = u v u^-1 v^-1
GroupWord commutator(const GroupWord& u, const GroupWord& v);
GroupWord product(Alphabet alphabet, std::initializer_list<GroupWord> parts);

// Boundary word (y_1...y_g)^-1 (x_1 y_1 x_1^-1 ... x_g y_g x_g^-1).
GroupWord omega(int genus);

// Replaces every generator by the word images[gen] (images live in a common
// target alphabet). The result is freely reduced.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

// Letterwise projection F -> F' (x_i -> 1, y_i -> y_i).
GroupWord project_to_y(const GroupWord& w);
// Letterwise inclusions F' -> F and F'' -> F.
GroupWord include_in_full(const GroupWord& w);

// Parses the word grammar: x<i>, y<i>, optional ^<int>, juxtaposition,
// [u,v] commutators and parentheses. "1" or "" is the identity.
GroupWord parse_word(Alphabet alphabet, std::string_view text);

} // namespace jfilt
