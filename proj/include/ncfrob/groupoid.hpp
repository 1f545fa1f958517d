#pragma once

// Finite groups and groupoids, and their (weak) Hopf algebras.
//
// Composition convention: g * h is defined iff source(g) == target(h), and
// then target(g * h) = target(g), source(g * h) = source(h).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncfrob/whopf.hpp"

namespace ncfrob {

class FiniteGroup {
public:
    /// `table[g * order + h]` is g h. Throws InputError unless it is a group.
    FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table);

    std::size_t order() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t g) const { return inverse_.at(g); }

private:
    std::vector<std::string> names_;
    std::vector<std::size_t> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// Z/n with elements named "g0".."g<n-1>".
FiniteGroup cyclic_group(std::size_t n);

struct Morphism {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
};

class Groupoid {
public:
    /// Validates closure, associativity, identities and inverses; throws
    /// InputError naming the first violated axiom.
    Groupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
             const std::vector<std::array<std::size_t, 3>>& compose,
             const std::vector<std::pair<std::size_t, std::size_t>>& inverses);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    std::size_t size() const { return morphisms_.size(); }
    std::optional<std::size_t> compose(std::size_t g, std::size_t h) const;
    std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
    std::size_t identity(std::size_t object) const { return identity_.at(object); }

    /// Composition triples (g, h, gh) in (g, h) order.
    std::vector<std::array<std::size_t, 3>> composition_table() const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::optional<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> identity_;
};

/// `objects` objects with Hom(x, y) a copy of `group` for every pair.
/// Morphism ids are "x<-y:g" with the group element name g, or "x<-y" when
/// the group is trivial.
Groupoid transitive_groupoid(std::size_t objects, const FiniteGroup& group, const std::string& prefix = "o");
/// Exactly one morphism between any two objects.
Groupoid pair_groupoid(std::size_t objects);
/// A group viewed as a one-object groupoid.
Groupoid group_groupoid(const FiniteGroup& group);
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

struct ComponentSpec {
    std::size_t objects = 1;
    std::size_t group_order = 1;  ///< 1 or 2
};

/// Disjoint union of transitive components, each with a trivial or Z/2
/// vertex group.
Groupoid groupoid_from_components(const std::vector<ComponentSpec>& components);
/// Parses "k:g,k:g,..." (e.g. "2:1,1:2").
std::vector<ComponentSpec> parse_components(const std::string& text);

/// Every groupoid, up to isomorphism, with at most `max_objects` objects and
/// at most two morphisms between any ordered pair of objects.
std::vector<std::vector<ComponentSpec>> small_groupoid_fixtures(std::size_t max_objects = 3);

/// Groupoid algebra: gh = composite or 0, Delta(g) = g (x) g, eps(g) = 1,
/// S(g) = g^{-1}.
whopf::WeakHopfData groupoid_algebra(const Groupoid& g);

/// k[G] as a Hopf algebra.
whopf::WeakHopfData hopf_group_algebra(const FiniteGroup& g);

/// Sum of the morphisms with source x. These span the left integrals.
Vector source_fibre_sum(const Groupoid& g, std::size_t object);
/// Sum of the morphisms with target x. These span the right integrals.
Vector target_fibre_sum(const Groupoid& g, std::size_t object);

}  // namespace ncfrob
