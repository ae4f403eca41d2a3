#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "repbasis/integer.hpp"

namespace repbasis {

using Count = std::uint64_t;

/// Finite set of integers stored strictly increasing.
class FiniteSet {
public:
    FiniteSet() = default;
    /// Sorts and drops duplicates.
    explicit FiniteSet(std::vector<Int> elements);
    FiniteSet(std::initializer_list<Int> elements) : FiniteSet(std::vector<Int>(elements)) {}
    FiniteSet(std::initializer_list<long long> elements);

    std::span<const Int> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const Int& min() const { return elements_.front(); }
    const Int& max() const { return elements_.back(); }
    bool contains(const Int& value) const;

    /// max |a| over the set; 0 for the empty set.
    Int max_abs() const;

    /// Returns false when the value was already present.
    bool insert(const Int& value);

    bool includes(const FiniteSet& other) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Int> elements_;
};

/// r_{A,h} restricted to its support: n -> number of multisets of h elements
/// of A summing to n. The key set is exactly the sumset hA.
struct RepHistogram {
    unsigned order = 0;
    std::map<Int, Count> counts;

    Count at(const Int& n) const;
    Count total() const;
};

/// r_{A,h}(n): nondecreasing h-tuples from A with sum n.
Count count_unordered(const FiniteSet& set, unsigned h, const Int& n);

/// R_{A,h}(n): ordered h-tuples from A with sum n, by weighting each multiset
/// with h! / prod(multiplicity!).
Count count_ordered(const FiniteSet& set, unsigned h, const Int& n);

/// r^_{A,h}(n): h-element subsets of A with sum n.
Count count_restricted(const FiniteSet& set, unsigned h, const Int& n);

/// R^_{A,h}(n): ordered h-tuples of pairwise distinct elements with sum n.
Count count_restricted_ordered(const FiniteSet& set, unsigned h, const Int& n);

/// Throws std::invalid_argument for an empty set.
RepHistogram histogram(const FiniteSet& set, unsigned h);

/// Some n with r_{A,h}(n) >= 2, the least such n.
std::optional<Int> sidon_collision(const FiniteSet& set, unsigned h);

/// r_{A,h}(n) <= 1 for all n.
bool is_sidon(const FiniteSet& set, unsigned h);

/// Same answer as is_sidon, stopping at the first repeated sum.
bool is_sidon_fast(const FiniteSet& set, unsigned h);

/// (2h - 1) * max |a|. Adjoining any c with |c| above this keeps a Sidon set
/// of order h Sidon. Throws std::invalid_argument for an empty set.
Int sidon_extension_bound(const FiniteSet& set, unsigned h);

Count factorial(unsigned n);

/// C(size + h - 1, h): number of multisets of size h drawn from `size` elements.
Count multiset_count(std::size_t size, unsigned h);

}  // namespace repbasis
