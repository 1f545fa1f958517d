#include "ncfrob/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ncfrob::io {

namespace {

Json scalar_json(const Scalar& x) { return to_string(x); }

void put_sparse_vector(Json& out, const char* key, const Vector& v) {
    Json arr = Json::array();
    for (const auto& [k, c] : v) arr.push_back(Json::array({k, scalar_json(c)}));
    out[key] = std::move(arr);
}

/// Column-major matrix as [[col, row, c]].
void put_sparse_matrix(Json& out, const char* key, const Matrix& m) {
    Json arr = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) arr.push_back(Json::array({c, r, scalar_json(v)}));
    }
    out[key] = std::move(arr);
}

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& where, const char* key) {
    if (!j.is_object()) throw SchemaError(where.empty() ? "/" : where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + "/" + key, "missing required field");
    return *it;
}

const Json& require_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where, "expected an array");
    return j;
}

std::size_t index_value(const Json& j, const std::string& where, std::size_t bound) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw SchemaError(where, "expected a non-negative integer index");
    }
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw SchemaError(where, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

Scalar scalar_value(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_scalar(j.get<std::string>());
        if (j.is_number_integer()) return Scalar(j.get<long>());
    } catch (const InputError& e) {
        throw SchemaError(where, e.what());
    }
    throw SchemaError(where, "expected a rational string \"p/q\" or an integer");
}

/// Each entry is `arity` indices followed by one coefficient.
template <typename F>
void for_entries(const Json& arr, const std::string& where, std::size_t arity, F&& f) {
    require_array(arr, where);
    for (std::size_t e = 0; e < arr.size(); ++e) {
        const std::string w = at(where, e);
        const Json& entry = arr[e];
        if (!entry.is_array() || entry.size() != arity + 1) {
            throw SchemaError(w, "expected an array of " + std::to_string(arity) + " indices and a coefficient");
        }
        f(entry, w);
    }
}

Vector read_vector(const Json& arr, const std::string& where, std::size_t dim) {
    Vector v(dim);
    for_entries(arr, where, 1, [&](const Json& entry, const std::string& w) {
        v.add(index_value(entry[0], w + "/0", dim), scalar_value(entry[1], w + "/1"));
    });
    return v;
}

Matrix read_matrix(const Json& arr, const std::string& where, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for_entries(arr, where, 2, [&](const Json& entry, const std::string& w) {
        const std::size_t c = index_value(entry[0], w + "/0", cols);
        const std::size_t r = index_value(entry[1], w + "/1", rows);
        m.add(r, c, scalar_value(entry[2], w + "/2"));
    });
    return m;
}

std::size_t read_dim(const Json& j) {
    const Json& d = require(j, "", "dim");
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw SchemaError("/dim", "expected a positive integer");
    return d.get<std::size_t>();
}

}  // namespace

Json to_json(const AlgebraData& a) {
    const std::size_t d = a.dim();
    Json out;
    out["dim"] = d;
    out["labels"] = a.labels();
    Json mult = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [k, c] : a.product(i, j)) mult.push_back(Json::array({i, j, k, scalar_json(c)}));
        }
    }
    out["mult"] = std::move(mult);
    put_sparse_vector(out, "unit", a.unit());
    return out;
}

Json to_json(const ComultData& c) {
    Json out = to_json(*c.algebra);
    put_sparse_matrix(out, "delta", c.delta);
    if (c.counit) put_sparse_vector(out, "counit", *c.counit);
    return out;
}

Json to_json(const whopf::WeakHopfData& h) {
    Json out = to_json(*h.algebra);
    put_sparse_matrix(out, "delta_wk", h.delta_wk);
    put_sparse_vector(out, "epsilon_wk", h.epsilon_wk);
    put_sparse_matrix(out, "antipode", h.antipode);
    return out;
}

Json to_json(const Groupoid& g) {
    Json out;
    out["objects"] = g.objects();
    Json morphisms = Json::array();
    for (const auto& m : g.morphisms()) {
        Json entry;
        entry["id"] = m.id;
        entry["src"] = m.source;
        entry["tgt"] = m.target;
        morphisms.push_back(std::move(entry));
    }
    out["morphisms"] = std::move(morphisms);
    Json compose = Json::array();
    for (const auto& [a, b, ab] : g.composition_table()) compose.push_back(Json::array({a, b, ab}));
    out["compose"] = std::move(compose);
    Json inv = Json::array();
    for (std::size_t m = 0; m < g.size(); ++m) inv.push_back(Json::array({m, g.inverse(m)}));
    out["inv"] = std::move(inv);
    return out;
}

AlgebraPtr algebra_from_json(const Json& j) {
    const std::size_t d = read_dim(j);
    std::vector<std::string> labels;
    if (auto it = j.find("labels"); it != j.end()) {
        require_array(*it, "/labels");
        if (it->size() != d) throw SchemaError("/labels", "expected " + std::to_string(d) + " labels");
        for (std::size_t i = 0; i < d; ++i) {
            if (!(*it)[i].is_string()) throw SchemaError(at("/labels", i), "expected a string");
            labels.push_back((*it)[i].get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::vector<Vector> products(d * d, Vector(d));
    for_entries(require(j, "", "mult"), "/mult", 3, [&](const Json& entry, const std::string& w) {
        const std::size_t a = index_value(entry[0], w + "/0", d);
        const std::size_t b = index_value(entry[1], w + "/1", d);
        const std::size_t k = index_value(entry[2], w + "/2", d);
        products[a * d + b].add(k, scalar_value(entry[3], w + "/3"));
    });
    Vector unit = read_vector(require(j, "", "unit"), "/unit", d);
    return std::make_shared<const AlgebraData>(std::move(labels), std::move(products), std::move(unit));
}

ComultData comult_from_json(const Json& j) {
    AlgebraPtr a = algebra_from_json(j);
    const std::size_t d = a->dim();
    Matrix delta = read_matrix(require(j, "", "delta"), "/delta", d * d, d);
    std::optional<Vector> counit;
    if (auto it = j.find("counit"); it != j.end()) counit = read_vector(*it, "/counit", d);
    return ComultData(std::move(a), std::move(delta), std::move(counit));
}

whopf::WeakHopfData weak_hopf_from_json(const Json& j) {
    AlgebraPtr a = algebra_from_json(j);
    const std::size_t d = a->dim();
    Matrix delta = read_matrix(require(j, "", "delta_wk"), "/delta_wk", d * d, d);
    Vector eps = read_vector(require(j, "", "epsilon_wk"), "/epsilon_wk", d);
    Matrix s = read_matrix(require(j, "", "antipode"), "/antipode", d, d);
    return whopf::WeakHopfData(std::move(a), std::move(delta), std::move(eps), std::move(s));
}

Groupoid groupoid_from_json(const Json& j) {
    const Json& objs = require_array(require(j, "", "objects"), "/objects");
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (!objs[i].is_string()) throw SchemaError(at("/objects", i), "expected a string");
        objects.push_back(objs[i].get<std::string>());
    }
    const Json& ms = require_array(require(j, "", "morphisms"), "/morphisms");
    std::vector<Morphism> morphisms;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::string w = at("/morphisms", i);
        const Json& id = require(ms[i], w, "id");
        if (!id.is_string()) throw SchemaError(w + "/id", "expected a string");
        morphisms.push_back({id.get<std::string>(), index_value(require(ms[i], w, "src"), w + "/src", objects.size()),
                             index_value(require(ms[i], w, "tgt"), w + "/tgt", objects.size())});
    }
    const std::size_t n = morphisms.size();
    std::vector<std::array<std::size_t, 3>> compose;
    const Json& cs = require_array(require(j, "", "compose"), "/compose");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string w = at("/compose", i);
        if (!cs[i].is_array() || cs[i].size() != 3) throw SchemaError(w, "expected [g, h, gh]");
        compose.push_back({index_value(cs[i][0], w + "/0", n), index_value(cs[i][1], w + "/1", n),
                           index_value(cs[i][2], w + "/2", n)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> inverses;
    const Json& is = require_array(require(j, "", "inv"), "/inv");
    for (std::size_t i = 0; i < is.size(); ++i) {
        const std::string w = at("/inv", i);
        if (!is[i].is_array() || is[i].size() != 2) throw SchemaError(w, "expected [g, ginv]");
        inverses.emplace_back(index_value(is[i][0], w + "/0", n), index_value(is[i][1], w + "/1", n));
    }
    return Groupoid(std::move(objects), std::move(morphisms), compose, inverses);
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ncfrob::io
