#include "jfilt/word.hpp"

#include <cctype>
#include <sstream>

namespace jfilt {

Alphabet::Alphabet(int genus, AlphabetKind kind) : genus_(genus), kind_(kind)
{
    if (genus < 1)
        throw ValidationError("alphabet: genus must be at least 1");
}

int Alphabet::x(int i) const
{
    if (!has_x() || i < 1 || i > genus_)
        throw ValidationError("alphabet: no generator x" + std::to_string(i));
    return i - 1;
}

int Alphabet::y(int i) const
{
    if (!has_y() || i < 1 || i > genus_)
        throw ValidationError("alphabet: no generator y" + std::to_string(i));
    return kind_ == AlphabetKind::full ? genus_ + i - 1 : i - 1;
}

bool Alphabet::is_x(int gen) const
{
    switch (kind_) {
    case AlphabetKind::full: return gen < genus_;
    case AlphabetKind::xOnly: return true;
    case AlphabetKind::yOnly: return false;
    }
    return false;
}

int Alphabet::handle(int gen) const
{
    return (kind_ == AlphabetKind::full && gen >= genus_) ? gen - genus_ + 1 : gen + 1;
}

std::string Alphabet::name(int gen) const
{
    return (is_x(gen) ? "x" : "y") + std::to_string(handle(gen));
}

namespace {

void push_letter(std::vector<Letter>& out, Letter l)
{
    if (l.exp == 0)
        return;
    if (!out.empty() && out.back().gen == l.gen) {
        out.back().exp += l.exp;
        if (out.back().exp == 0)
            out.pop_back();
        return;
    }
    out.push_back(l);
}

} // namespace

GroupWord GroupWord::reduce(Alphabet alphabet, const std::vector<Letter>& raw)
{
    GroupWord w(alphabet);
    for (const Letter& l : raw) {
        if (l.gen < 0 || l.gen >= alphabet.size())
            throw ValidationError("word: generator index " + std::to_string(l.gen) +
                                  " out of range for alphabet of size " +
                                  std::to_string(alphabet.size()));
        push_letter(w.letters_, l);
    }
    return w;
}

GroupWord GroupWord::generator(Alphabet alphabet, int gen, std::int64_t exp)
{
    return reduce(alphabet, {Letter{gen, exp}});
}

std::int64_t GroupWord::length() const
{
    std::int64_t n = 0;
    for (const Letter& l : letters_)
        n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

std::vector<std::int64_t> GroupWord::abelianization() const
{
    std::vector<std::int64_t> v(alphabet_.size(), 0);
    for (const Letter& l : letters_)
        v[l.gen] += l.exp;
    return v;
}

std::string GroupWord::str() const
{
    if (letters_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first)
            os << ' ';
        first = false;
        os << alphabet_.name(l.gen);
        if (l.exp != 1)
            os << '^' << l.exp;
    }
    return os.str();
}

static void require_same(const GroupWord& u, const GroupWord& v)
{
    if (!(u.alphabet() == v.alphabet()))
        throw ValidationError("word: alphabet mismatch");
}

GroupWord multiply(const GroupWord& u, const GroupWord& v)
{
    require_same(u, v);
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return GroupWord::reduce(u.alphabet(), raw);
}

GroupWord invert(const GroupWord& u)
{
    std::vector<Letter> raw(u.letters().rbegin(), u.letters().rend());
    for (Letter& l : raw)
        l.exp = -l.exp;
    return GroupWord::reduce(u.alphabet(), raw);
}

GroupWord power(const GroupWord& u, std::int64_t e)
{
    GroupWord base = e < 0 ? invert(u) : u;
    std::vector<Letter> raw;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
        raw.insert(raw.end(), base.letters().begin(), base.letters().end());
    return GroupWord::reduce(u.alphabet(), raw);
}

GroupWord commutator(const GroupWord& u, const GroupWord& v)
{
    require_same(u, v);
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    GroupWord ui = invert(u), vi = invert(v);
    raw.insert(raw.end(), ui.letters().begin(), ui.letters().end());
    raw.insert(raw.end(), vi.letters().begin(), vi.letters().end());
    return GroupWord::reduce(u.alphabet(), raw);
}

GroupWord product(Alphabet alphabet, std::initializer_list<GroupWord> parts)
{
    std::vector<Letter> raw;
    for (const GroupWord& p : parts) {
        if (!(p.alphabet() == alphabet))
            throw ValidationError("word: alphabet mismatch");
        raw.insert(raw.end(), p.letters().begin(), p.letters().end());
    }
    return GroupWord::reduce(alphabet, raw);
}

GroupWord omega(int genus)
{
    Alphabet a(genus, AlphabetKind::full);
    std::vector<Letter> raw;
    for (int i = genus; i >= 1; --i)
        raw.push_back({a.y(i), -1});
    for (int i = 1; i <= genus; ++i) {
        raw.push_back({a.x(i), 1});
        raw.push_back({a.y(i), 1});
        raw.push_back({a.x(i), -1});
    }
    return GroupWord::reduce(a, raw);
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images)
{
    if (static_cast<int>(images.size()) != w.alphabet().size())
        throw ValidationError("substitute: need one image per generator");
    if (images.empty())
        return w;
    Alphabet target = images.front().alphabet();
    std::vector<GroupWord> inverses;
    inverses.reserve(images.size());
    for (const GroupWord& im : images) {
        if (!(im.alphabet() == target))
            throw ValidationError("substitute: images over different alphabets");
        inverses.push_back(invert(im));
    }
    std::vector<Letter> raw;
    for (const Letter& l : w.letters()) {
        const GroupWord& part = l.exp > 0 ? images[l.gen] : inverses[l.gen];
        for (std::int64_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i)
            raw.insert(raw.end(), part.letters().begin(), part.letters().end());
    }
    return GroupWord::reduce(target, raw);
}

GroupWord project_to_y(const GroupWord& w)
{
    const Alphabet& a = w.alphabet();
    if (a.kind() != AlphabetKind::full)
        throw ValidationError("project_to_y: expected a word over the full alphabet");
    Alphabet yonly(a.genus(), AlphabetKind::yOnly);
    std::vector<Letter> raw;
    for (const Letter& l : w.letters())
        if (!a.is_x(l.gen))
            raw.push_back({yonly.y(a.handle(l.gen)), l.exp});
    return GroupWord::reduce(yonly, raw);
}

GroupWord include_in_full(const GroupWord& w)
{
    const Alphabet& a = w.alphabet();
    Alphabet full(a.genus(), AlphabetKind::full);
    if (a.kind() == AlphabetKind::full)
        return w;
    std::vector<Letter> raw;
    for (const Letter& l : w.letters()) {
        int h = a.handle(l.gen);
        raw.push_back({a.kind() == AlphabetKind::xOnly ? full.x(h) : full.y(h), l.exp});
    }
    return GroupWord::reduce(full, raw);
}

namespace {

class WordParser {
public:
    WordParser(Alphabet alphabet, std::string_view text) : a_(alphabet), s_(text) {}

    GroupWord parse()
    {
        GroupWord w = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ValidationError("word syntax at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::int64_t integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start)
            fail("expected an integer");
        return neg ? -v : v;
    }

    bool at_atom()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return c == 'x' || c == 'y' || c == '(' || c == '[' || c == '1';
    }

    GroupWord atom()
    {
        skip();
        char c = s_[pos_];
        if (c == '1') {
            ++pos_;
            return GroupWord(a_);
        }
        if (c == '(') {
            ++pos_;
            GroupWord w = expr();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            GroupWord u = expr();
            expect(',');
            GroupWord v = expr();
            expect(']');
            return commutator(u, v);
        }
        ++pos_;
        std::size_t start = pos_;
        int idx = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            idx = idx * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start)
            fail("expected generator index");
        int gen = c == 'x' ? a_.x(idx) : a_.y(idx);
        return GroupWord::generator(a_, gen);
    }

    GroupWord factor()
    {
        GroupWord w = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            w = power(w, integer());
        }
        return w;
    }

    GroupWord expr()
    {
        std::vector<Letter> raw;
        while (at_atom()) {
            GroupWord f = factor();
            raw.insert(raw.end(), f.letters().begin(), f.letters().end());
        }
        return GroupWord::reduce(a_, raw);
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Alphabet a_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

GroupWord parse_word(Alphabet alphabet, std::string_view text)
{
    return WordParser(alphabet, text).parse();
}

} // namespace jfilt
