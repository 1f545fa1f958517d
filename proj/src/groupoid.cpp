#include "ncfrob/groupoid.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ncfrob {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table)
    : names_(std::move(names)), table_(std::move(table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw InputError("group must be non-empty");
    if (table_.size() != n * n) throw InputError("group table must be order x order");
    for (auto v : table_) {
        if (v >= n) throw InputError("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
                    throw InputError("group table is not associative");
                }
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = multiply(e, g) == g && multiply(g, e) == g;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw InputError("group table has no identity");
    inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            if (multiply(g, h) == identity_ && multiply(h, g) == identity_) inverse_[g] = h;
        }
        if (inverse_[g] == n) throw InputError("group element " + names_[g] + " has no inverse");
    }
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    std::vector<std::string> names;
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    }
    return FiniteGroup(std::move(names), std::move(table));
}

Groupoid::Groupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   const std::vector<std::array<std::size_t, 3>>& compose,
                   const std::vector<std::pair<std::size_t, std::size_t>>& inverses)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
    const std::size_t n = morphisms_.size();
    if (objects_.empty()) throw InputError("groupoid has no objects");
    if (n == 0) throw InputError("groupoid has no morphisms");
    for (const auto& m : morphisms_) {
        if (m.source >= objects_.size() || m.target >= objects_.size()) {
            throw InputError("morphism " + m.id + " has an out-of-range endpoint");
        }
    }
    table_.assign(n * n, std::nullopt);
    for (const auto& [g, h, gh] : compose) {
        if (g >= n || h >= n || gh >= n) throw InputError("composition entry out of range");
        if (morphisms_[g].source != morphisms_[h].target) {
            throw InputError("composition: " + morphisms_[g].id + " * " + morphisms_[h].id +
                             " listed but source and target do not match");
        }
        if (table_[g * n + h] && *table_[g * n + h] != gh) {
            throw InputError("composition: conflicting entries for " + morphisms_[g].id + " * " + morphisms_[h].id);
        }
        table_[g * n + h] = gh;
    }
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            if (morphisms_[g].source != morphisms_[h].target) continue;
            const auto gh = table_[g * n + h];
            if (!gh) {
                throw InputError("closure: missing composite " + morphisms_[g].id + " * " + morphisms_[h].id);
            }
            if (morphisms_[*gh].target != morphisms_[g].target || morphisms_[*gh].source != morphisms_[h].source) {
                throw InputError("closure: composite " + morphisms_[g].id + " * " + morphisms_[h].id +
                                 " has the wrong endpoints");
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto ab = table_[a * n + b];
            if (!ab) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const auto bc = table_[b * n + c];
                if (!bc) continue;
                if (table_[*ab * n + c] != table_[a * n + *bc]) {
                    throw InputError("associativity fails at (" + morphisms_[a].id + ", " + morphisms_[b].id +
                                     ", " + morphisms_[c].id + ")");
                }
            }
        }
    }
    identity_.assign(objects_.size(), n);
    for (std::size_t g = 0; g < n; ++g) {
        const auto& m = morphisms_[g];
        if (m.source != m.target) continue;
        bool ok = true;
        for (std::size_t h = 0; h < n && ok; ++h) {
            if (morphisms_[h].target == m.source && table_[g * n + h] != h) ok = false;
            if (morphisms_[h].source == m.target && table_[h * n + g] != h) ok = false;
        }
        if (ok) identity_[m.source] = g;
    }
    for (std::size_t x = 0; x < objects_.size(); ++x) {
        if (identity_[x] == n) throw InputError("identity: object " + objects_[x] + " has no identity morphism");
    }
    inverse_.assign(n, n);
    for (const auto& [g, h] : inverses) {
        if (g >= n || h >= n) throw InputError("inverse entry out of range");
        if (table_[g * n + h] != identity_[morphisms_[g].target] ||
            table_[h * n + g] != identity_[morphisms_[g].source]) {
            throw InputError("inverse: " + morphisms_[h].id + " is not an inverse of " + morphisms_[g].id);
        }
        inverse_[g] = h;
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (inverse_[g] == n) throw InputError("inverse: no inverse listed for " + morphisms_[g].id);
    }
}

std::optional<std::size_t> Groupoid::compose(std::size_t g, std::size_t h) const {
    return table_.at(g * size() + h);
}

std::vector<std::array<std::size_t, 3>> Groupoid::composition_table() const {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t g = 0; g < size(); ++g) {
        for (std::size_t h = 0; h < size(); ++h) {
            if (auto gh = compose(g, h)) out.push_back({g, h, *gh});
        }
    }
    return out;
}

Groupoid transitive_groupoid(std::size_t objects, const FiniteGroup& group, const std::string& prefix) {
    if (objects == 0) throw InputError("groupoid needs at least one object");
    const std::size_t order = group.order();
    std::vector<std::string> names;
    for (std::size_t x = 0; x < objects; ++x) names.push_back(prefix + std::to_string(x));
    // Morphism (x, y, g): target x, source y.
    auto index = [&](std::size_t x, std::size_t y, std::size_t g) { return (x * objects + y) * order + g; };
    std::vector<Morphism> morphisms;
    for (std::size_t x = 0; x < objects; ++x) {
        for (std::size_t y = 0; y < objects; ++y) {
            for (std::size_t g = 0; g < order; ++g) {
                std::string id = names[x] + "<-" + names[y];
                if (order > 1) id += ":" + group.names()[g];
                morphisms.push_back({std::move(id), y, x});
            }
        }
    }
    std::vector<std::array<std::size_t, 3>> compose;
    std::vector<std::pair<std::size_t, std::size_t>> inverses;
    for (std::size_t x = 0; x < objects; ++x) {
        for (std::size_t y = 0; y < objects; ++y) {
            for (std::size_t g = 0; g < order; ++g) {
                inverses.emplace_back(index(x, y, g), index(y, x, group.inverse(g)));
                for (std::size_t z = 0; z < objects; ++z) {
                    for (std::size_t h = 0; h < order; ++h) {
                        compose.push_back({index(x, y, g), index(y, z, h), index(x, z, group.multiply(g, h))});
                    }
                }
            }
        }
    }
    return Groupoid(std::move(names), std::move(morphisms), compose, inverses);
}

Groupoid pair_groupoid(std::size_t objects) { return transitive_groupoid(objects, cyclic_group(1)); }

Groupoid group_groupoid(const FiniteGroup& group) {
    std::vector<Morphism> morphisms;
    for (const auto& name : group.names()) morphisms.push_back({name, 0, 0});
    std::vector<std::array<std::size_t, 3>> compose;
    std::vector<std::pair<std::size_t, std::size_t>> inverses;
    for (std::size_t g = 0; g < group.order(); ++g) {
        inverses.emplace_back(g, group.inverse(g));
        for (std::size_t h = 0; h < group.order(); ++h) compose.push_back({g, h, group.multiply(g, h)});
    }
    return Groupoid({"*"}, std::move(morphisms), compose, inverses);
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
    std::vector<std::string> objects = a.objects();
    objects.insert(objects.end(), b.objects().begin(), b.objects().end());
    std::set<std::string> seen(objects.begin(), objects.end());
    const bool rename = seen.size() != objects.size();
    if (rename) {
        for (std::size_t x = 0; x < objects.size(); ++x) {
            objects[x] = (x < a.objects().size() ? "a." : "b.") + objects[x];
        }
    }
    const std::size_t na = a.size();
    const std::size_t oa = a.objects().size();
    std::vector<Morphism> morphisms;
    for (const auto& m : a.morphisms()) morphisms.push_back({rename ? "a." + m.id : m.id, m.source, m.target});
    for (const auto& m : b.morphisms()) {
        morphisms.push_back({rename ? "b." + m.id : m.id, m.source + oa, m.target + oa});
    }
    auto compose = a.composition_table();
    for (auto [g, h, gh] : b.composition_table()) compose.push_back({g + na, h + na, gh + na});
    std::vector<std::pair<std::size_t, std::size_t>> inverses;
    for (std::size_t g = 0; g < na; ++g) inverses.emplace_back(g, a.inverse(g));
    for (std::size_t g = 0; g < b.size(); ++g) inverses.emplace_back(g + na, b.inverse(g) + na);
    return Groupoid(std::move(objects), std::move(morphisms), compose, inverses);
}

Groupoid groupoid_from_components(const std::vector<ComponentSpec>& components) {
    if (components.empty()) throw InputError("at least one component is required");
    std::optional<Groupoid> out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& spec = components[c];
        if (spec.group_order != 1 && spec.group_order != 2) {
            throw InputError("component vertex group order must be 1 or 2");
        }
        Groupoid part = transitive_groupoid(spec.objects, cyclic_group(spec.group_order),
                                            std::string(1, static_cast<char>('a' + c % 26)));
        out = out ? disjoint_union(*out, part) : part;
    }
    return *out;
}

std::vector<ComponentSpec> parse_components(const std::string& text) {
    std::vector<ComponentSpec> out;
    std::stringstream ss(text);
    std::string part;
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw InputError("invalid component '" + part + "'; expected objects:group_order");
        }
        return v;
    };
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw InputError("invalid component '" + part + "'; expected objects:group_order");
        ComponentSpec spec{number(std::string_view(part).substr(0, colon)),
                           number(std::string_view(part).substr(colon + 1))};
        if (spec.objects == 0) throw InputError("component must have at least one object");
        out.push_back(spec);
    }
    if (out.empty()) throw InputError("no components given");
    return out;
}

std::vector<std::vector<ComponentSpec>> small_groupoid_fixtures(std::size_t max_objects) {
    // Components ordered by (objects, group order); multisets are
    // enumerated as non-decreasing sequences.
    std::vector<ComponentSpec> kinds;
    for (std::size_t k = 1; k <= max_objects; ++k) {
        kinds.push_back({k, 1});
        kinds.push_back({k, 2});
    }
    std::vector<std::vector<ComponentSpec>> out;
    std::vector<ComponentSpec> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (!current.empty()) out.push_back(current);
        for (std::size_t k = start; k < kinds.size(); ++k) {
            if (kinds[k].objects > remaining) continue;
            current.push_back(kinds[k]);
            rec(k, remaining - kinds[k].objects);
            current.pop_back();
        }
    };
    rec(0, max_objects);
    return out;
}

whopf::WeakHopfData groupoid_algebra(const Groupoid& g) {
    const std::size_t n = g.size();
    std::vector<std::string> labels;
    for (const auto& m : g.morphisms()) labels.push_back(m.id);
    std::vector<Vector> products(n * n, Vector(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (auto ab = g.compose(a, b)) products[a * n + b].set(*ab, 1);
        }
    }
    Vector unit(n);
    for (std::size_t x = 0; x < g.objects().size(); ++x) unit.set(g.identity(x), 1);
    auto algebra = std::make_shared<const AlgebraData>(std::move(labels), std::move(products), std::move(unit));

    Matrix delta(n * n, n);
    Vector eps(n);
    Matrix antipode(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        delta.set(a * n + a, a, 1);
        eps.set(a, 1);
        antipode.set(g.inverse(a), a, 1);
    }
    return whopf::WeakHopfData(std::move(algebra), std::move(delta), std::move(eps), std::move(antipode));
}

whopf::WeakHopfData hopf_group_algebra(const FiniteGroup& g) { return groupoid_algebra(group_groupoid(g)); }

Vector source_fibre_sum(const Groupoid& g, std::size_t object) {
    Vector v(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (g.morphisms()[m].source == object) v.set(m, 1);
    }
    return v;
}

Vector target_fibre_sum(const Groupoid& g, std::size_t object) {
    Vector v(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (g.morphisms()[m].target == object) v.set(m, 1);
    }
    return v;
}

}  // namespace ncfrob
