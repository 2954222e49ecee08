#include "jfilt/io.hpp"

#include <fstream>
#include <sstream>

namespace jfilt {

Json integer_to_json(const Integer& v)
{
    if (v.fits_slong_p())
        return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw ValidationError("json: bad integer '" + j.get<std::string>() + "'");
        return v;
    }
    throw ValidationError("json: expected an integer, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ValidationError(std::string("json: field '") + key + "' must be an integer");
    return v.get<int>();
}

Json integers(const std::vector<Integer>& v)
{
    Json a = Json::array();
    for (const Integer& c : v)
        a.push_back(integer_to_json(c));
    return a;
}

std::vector<Integer> integers_from(const Json& j)
{
    if (!j.is_array())
        throw ValidationError("json: expected an array of integers");
    std::vector<Integer> v;
    for (const Json& c : j)
        v.push_back(integer_from_json(c));
    return v;
}

} // namespace

Json to_json(const LieElement& u, const std::vector<std::string>& names)
{
    return Json{{"n", u.generators()}, {"k", u.degree()}, {"coords", integers(u.coords())}, {"text", u.str(names)}};
}

LieElement lie_from_json(const Json& j)
{
    return LieElement(int_field(j, "n"), int_field(j, "k"), integers_from(field(j, "coords")));
}

Json to_json(const TensorElement& t, const std::vector<std::string>& names)
{
    return Json{{"n", t.generators()}, {"k", t.degree()}, {"coords", integers(t.coords())}, {"text", t.str(names)}};
}

TensorElement tensor_from_json(const Json& j)
{
    return TensorElement(int_field(j, "n"), int_field(j, "k"), integers_from(field(j, "coords")));
}

Json to_json(const NilAut& h)
{
    Json images = Json::object();
    for (int gen = 0; gen < h.alphabet().size(); ++gen)
        images[h.alphabet().name(gen)] = h.image(gen).str();
    return Json{{"g", h.genus()}, {"q", h.level()}, {"images", images}};
}

NilAut aut_from_json(const Json& j)
{
    const int g = int_field(j, "g");
    const int q = int_field(j, "q");
    if (g < 1)
        throw ValidationError("json: genus must be positive");
    Alphabet a(g, AlphabetKind::full);
    const Json& images = field(j, "images");
    if (!images.is_object())
        throw ValidationError("json: 'images' must be an object");
    std::vector<GroupWord> words;
    for (int gen = 0; gen < a.size(); ++gen) {
        std::string name = a.name(gen);
        if (!images.contains(name))
            words.push_back(GroupWord::generator(a, gen));
        else if (!images.at(name).is_string())
            throw ValidationError("json: image of " + name + " must be a word string");
        else
            words.push_back(parse_word(a, images.at(name).get<std::string>()));
    }
    for (const auto& [key, value] : images.items()) {
        bool known = false;
        for (int gen = 0; gen < a.size(); ++gen)
            known = known || a.name(gen) == key;
        if (!known)
            throw ValidationError("json: unknown generator '" + key + "'");
    }
    return NilAut(g, q, words);
}

Json to_json(const LongitudeTuple& t)
{
    Json entries = Json::array();
    for (const GroupWord& w : t.entries)
        entries.push_back(w.str());
    return Json{{"g", t.genus()},
                {"q", t.level},
                {"kind", t.alphabet.kind() == AlphabetKind::xOnly ? "x" : "y"},
                {"entries", entries}};
}

LongitudeTuple tuple_from_json(const Json& j)
{
    const int g = int_field(j, "g");
    const int q = int_field(j, "q");
    std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "y";
    if (kind != "x" && kind != "y")
        throw ValidationError("json: tuple kind must be \"x\" or \"y\"");
    if (g < 1)
        throw ValidationError("json: genus must be positive");
    Alphabet a(g, kind == "x" ? AlphabetKind::xOnly : AlphabetKind::yOnly);
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        throw ValidationError("json: 'entries' must be an array");
    std::vector<GroupWord> words;
    for (const Json& e : entries) {
        if (!e.is_string())
            throw ValidationError("json: tuple entries must be word strings");
        words.push_back(parse_word(a, e.get<std::string>()));
    }
    return LongitudeTuple(a, q, words);
}

Json to_json(const ClasperGraph& g)
{
    Json vertices = Json::array();
    Json cyclic = Json::object();
    Json labels = Json::object();
    for (const auto& v : g.vertices) {
        vertices.push_back(Json{{"id", v.id}, {"arity", v.arity}, {"halfedges", v.halfedges}});
        if (v.arity == 3)
            cyclic[std::to_string(v.id)] = v.halfedges;
        else if (!v.label.empty())
            labels[std::to_string(v.id)] = integers(v.label);
    }
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json::array({e[0], e[1]}));
    return Json{{"rank", g.rank}, {"vertices", vertices}, {"edges", edges}, {"cyclic", cyclic}, {"labels", labels}};
}

ClasperGraph graph_from_json(const Json& j)
{
    ClasperGraph g;
    const Json& vertices = field(j, "vertices");
    if (!vertices.is_array())
        throw ValidationError("json: 'vertices' must be an array");
    const Json cyclic = j.contains("cyclic") ? j.at("cyclic") : Json::object();
    const Json labels = j.contains("labels") ? j.at("labels") : Json::object();
    int rank = -1;
    for (const Json& jv : vertices) {
        ClasperGraph::Vertex v;
        v.id = int_field(jv, "id");
        v.arity = int_field(jv, "arity");
        const std::string key = std::to_string(v.id);
        if (v.arity == 3 && cyclic.contains(key))
            v.halfedges = cyclic.at(key).get<std::vector<int>>();
        else if (jv.contains("halfedges"))
            v.halfedges = jv.at("halfedges").get<std::vector<int>>();
        else if (v.arity == 3)
            throw ValidationError("graph: missing cyclic order at vertex " + key);
        else
            throw ValidationError("graph: univalent vertex " + key + " needs its half-edge listed");
        if (v.arity == 1 && labels.contains(key)) {
            v.label = integers_from(labels.at(key));
            if (rank >= 0 && static_cast<int>(v.label.size()) != rank)
                throw ValidationError("graph: labels have different lengths");
            rank = static_cast<int>(v.label.size());
        }
        g.vertices.push_back(std::move(v));
    }
    g.rank = j.contains("rank") ? int_field(j, "rank") : std::max(rank, 0);
    const Json& edges = field(j, "edges");
    if (!edges.is_array())
        throw ValidationError("json: 'edges' must be an array");
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("json: each edge is a pair of half-edge ids");
        g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return g;
}

Json orientation_to_json(const ClasperGraph& g, const Orientation& o)
{
    Json out = Json::object();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int tail = o[e] ? g.edges[e][0] : g.edges[e][1];
        int head = o[e] ? g.edges[e][1] : g.edges[e][0];
        out[std::to_string(e)] = std::to_string(tail) + "->" + std::to_string(head);
    }
    return out;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("json: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

} // namespace jfilt
