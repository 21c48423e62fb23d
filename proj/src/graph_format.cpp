#include "feyngraph/graph_format.hpp"

#include <cctype>
#include <sstream>

namespace feyngraph {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                take();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') take();
            } else {
                break;
            }
        }
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }
    std::string word() {
        skip_ws();
        std::string w;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) w += take();
        if (w.empty()) fail("expected identifier");
        return w;
    }
    int integer() {
        skip_ws();
        std::string w;
        if (!eof() && peek() == '-') w += take();
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) w += take();
        if (w.empty() || w == "-") fail("expected integer");
        return std::stoi(w);
    }
};

} // namespace

std::vector<NamedTerm> parse_graph_file(const std::string& text) {
    Cursor cur{text};
    std::vector<NamedTerm> result;
    while (true) {
        cur.skip_ws();
        if (cur.eof()) break;
        std::string kw = cur.word();
        if (kw != "graph") cur.fail("expected 'graph'");
        std::string name = cur.word();
        cur.expect('{');

        int n = -1, m = -1;
        for (int field = 0; field < 2; ++field) {
            std::string f = cur.word();
            cur.expect('=');
            int v = cur.integer();
            if (f == "n")
                n = v;
            else if (f == "m")
                m = v;
            else
                cur.fail("expected 'n' or 'm'");
            cur.expect(';');
        }
        if (n < 0 || m < 0) cur.fail("graph must declare n and m");

        std::vector<std::vector<int>> targets(n);
        for (int v = 0; v < n; ++v) {
            cur.skip_ws();
            int dl = cur.line, dc = cur.col;
            std::string label = cur.word();
            if (label != "v" + std::to_string(v + 1))
                throw ParseError("expected 'v" + std::to_string(v + 1) + "'", dl, dc);
            cur.expect(':');
            while (true) {
                cur.skip_ws();
                if (!cur.eof() && cur.peek() == ';') break;
                int tl = cur.line, tc = cur.col;
                std::string tok = cur.word();
                if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'b'))
                    throw ParseError("expected target 'v<i>' or 'b<i>'", tl, tc);
                int idx = 0;
                try {
                    idx = std::stoi(tok.substr(1));
                } catch (...) {
                    throw ParseError("bad target '" + tok + "'", tl, tc);
                }
                if (tok[0] == 'v') {
                    if (idx < 1 || idx > n)
                        throw ParseError("dangling target '" + tok + "' in graph " + name, tl, tc);
                    targets[v].push_back(idx);
                } else {
                    if (idx < 1 || idx > m)
                        throw ParseError("dangling target '" + tok + "' in graph " + name, tl, tc);
                    targets[v].push_back(-idx);
                }
            }
            cur.expect(';');
        }
        cur.expect('}');
        result.push_back({name, make_graph(n, m, targets)});
    }
    return result;
}

DirectedGraph parse_canonical_key(const std::string& key) {
    std::string synthetic = "graph g { ";
    size_t comma = key.find(',');
    size_t semi = key.find(';');
    if (comma == std::string::npos || semi == std::string::npos || semi < comma)
        throw std::invalid_argument("bad canonical key: " + key);
    std::string n = key.substr(0, comma);
    std::string m = key.substr(comma + 1, semi - comma - 1);
    std::string body = key.substr(semi + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("bad canonical key: " + key);
    body = body.substr(1, body.size() - 2);

    synthetic += "n=" + n + "; m=" + m + "; ";
    int nn = std::stoi(n);
    std::vector<std::string> rows;
    {
        std::string acc;
        for (char c : body) {
            if (c == '|') {
                rows.push_back(acc);
                acc.clear();
            } else {
                acc += c;
            }
        }
        rows.push_back(acc);
    }
    if (nn == 0 && rows.size() == 1 && rows[0].empty()) rows.clear();
    if (static_cast<int>(rows.size()) != nn) throw std::invalid_argument("bad canonical key: " + key);
    for (int v = 0; v < nn; ++v) synthetic += "v" + std::to_string(v + 1) + ": " + rows[v] + "; ";
    synthetic += "}";

    auto parsed = parse_graph_file(synthetic);
    const GraphTerm& t = parsed.at(0).term;
    if (t.sign != 1 || canonical_key(t.graph) != key)
        throw std::invalid_argument("key is not canonical: " + key);
    return t.graph;
}

nlohmann::json graph_vector_json(const GraphVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [g, q] : v.terms()) j[canonical_key(g)] = rat_str(q);
    return j;
}

std::string word_key(const CobarWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " | ";
        s += canonical_key(w[i]);
    }
    return s;
}

nlohmann::json tensor_vector_json(const TensorVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, q] : v.terms()) {
        std::string key;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) key += " (x) ";
            key += canonical_key(w[i]);
        }
        j[key] = rat_str(q);
    }
    return j;
}

nlohmann::json cobar_vector_json(const CobarVector& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, q] : v.terms()) j[word_key(w)] = rat_str(q);
    return j;
}

WeightFunctional parse_weights_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("weights file must be a JSON object");
    WeightFunctional w;
    for (auto it = j.begin(); it != j.end(); ++it)
        w.set(parse_canonical_key(it.key()), rat_parse(it.value().get<std::string>()));
    return w;
}

Polynomial parse_polynomial_json(const nlohmann::json& j, int dim) {
    if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
    Polynomial p(dim);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::istringstream is(it.key());
        std::vector<int> exps;
        int e;
        while (is >> e) exps.push_back(e);
        if (static_cast<int>(exps.size()) != dim)
            throw std::invalid_argument("exponent key '" + it.key() + "' does not have " +
                                        std::to_string(dim) + " entries");
        p.add_term(exps, rat_parse(it.value().get<std::string>()));
    }
    return p;
}

nlohmann::json polynomial_json(const Polynomial& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, q] : p.terms()) {
        std::string key;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) key += " ";
            key += std::to_string(m[i]);
        }
        j[key] = rat_str(q);
    }
    return j;
}

PolyVectorField parse_pvf_json(const nlohmann::json& j, int dim) {
    if (!j.is_array()) throw std::invalid_argument("polyvector field must be a JSON array of terms");
    PolyVectorField f(dim);
    for (const auto& term : j) {
        std::vector<int> psis;
        for (const auto& i : term.at("psi")) {
            int idx = i.get<int>();
            if (idx < 1 || idx > dim) throw std::invalid_argument("psi index out of range");
            psis.push_back(idx - 1);
        }
        f.add_term(psis, parse_polynomial_json(term.at("coeff"), dim));
    }
    return f;
}

nlohmann::json pvf_json(const PolyVectorField& f) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [t, p] : f.terms()) {
        nlohmann::json term;
        term["psi"] = nlohmann::json::array();
        for (int i : t) term["psi"].push_back(i + 1);
        term["coeff"] = polynomial_json(p);
        j.push_back(term);
    }
    return j;
}

VertexState parse_state_json(const nlohmann::json& j) {
    VertexState s;
    s.dim = j.at("dimension").get<int>();
    if (s.dim < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& pv : j.at("states")) s.gammas.push_back(parse_pvf_json(pv, s.dim));
    return s;
}

std::vector<Polynomial> parse_args_json(const nlohmann::json& j, int expected_dim) {
    int dim = j.at("dimension").get<int>();
    if (expected_dim > 0 && dim != expected_dim)
        throw std::invalid_argument("argument dimension does not match state dimension");
    std::vector<Polynomial> args;
    for (const auto& p : j.at("args")) args.push_back(parse_polynomial_json(p, dim));
    return args;
}

nlohmann::json polydiff_json(const PolyDiffOperator& op) {
    nlohmann::json j;
    j["dimension"] = op.dim();
    j["arity"] = op.arity();
    auto terms = nlohmann::json::array();
    for (const auto& [d, p] : op.terms()) {
        nlohmann::json t;
        t["derivs"] = d;
        t["coeff"] = polynomial_json(p);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

} // namespace feyngraph
