#include "repbasis/repcount.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace repbasis {

namespace {

void require_order(unsigned h) {
    if (h == 0) throw std::invalid_argument("order h must be >= 1");
}

// Depth-first walk over nondecreasing index tuples. A branch at index i with
// `left` picks still to make is feasible only if
//   partial + left * A[i] <= n <= partial + left * max(A).
class MultisetWalker {
public:
    MultisetWalker(std::span<const Int> elems, const Int& target) : elems_(elems), target_(target) {}

    Count unordered(std::size_t start, unsigned left, const Int& partial) const {
        if (left == 0) return partial == target_ ? 1 : 0;
        if (partial + left * elems_.back() < target_) return 0;
        Count total = 0;
        for (std::size_t i = start; i < elems_.size(); ++i) {
            if (partial + left * elems_[i] > target_) break;
            total += unordered(i, left - 1, partial + elems_[i]);
        }
        return total;
    }

    // Chooses a multiplicity for each distinct element in turn; the leaf
    // contributes h! / prod(mult!) ordered tuples.
    Count ordered(std::size_t index, unsigned left, const Int& partial, Count weight) const {
        if (left == 0) return partial == target_ ? weight : 0;
        if (index == elems_.size()) return 0;
        if (partial + left * elems_[index] > target_) return 0;
        if (partial + left * elems_.back() < target_) return 0;
        Count total = 0;
        Int sum = partial;
        Count w = weight;
        for (unsigned mult = 0; mult <= left; ++mult) {
            if (mult > 0) {
                sum += elems_[index];
                // weight * C(left_before, mult) accumulated incrementally: choose
                // which of the remaining slots hold this element.
                w = w * (left - mult + 1) / mult;
            }
            total += ordered(index + 1, left - mult, sum, w);
        }
        return total;
    }

private:
    std::span<const Int> elems_;
    const Int& target_;
};

class SubsetWalker {
public:
    SubsetWalker(std::span<const Int> elems, const Int& target) : elems_(elems), target_(target) {
        prefix_.reserve(elems.size() + 1);
        prefix_.emplace_back(0);
        for (const auto& a : elems) prefix_.push_back(prefix_.back() + a);
    }

    Count unordered(std::size_t start, unsigned left, const Int& partial) const {
        if (left == 0) return partial == target_ ? 1 : 0;
        const std::size_t size = elems_.size();
        if (size - start < left) return 0;
        if (partial + (prefix_[size] - prefix_[size - left]) < target_) return 0;
        Count total = 0;
        for (std::size_t i = start; i + left <= size; ++i) {
            // smallest sum of `left` distinct elements starting at i
            if (partial + (prefix_[i + left] - prefix_[i]) > target_) break;
            total += unordered(i + 1, left - 1, partial + elems_[i]);
        }
        return total;
    }

    Count ordered(std::vector<char>& used, unsigned left, const Int& partial) const {
        if (left == 0) return partial == target_ ? 1 : 0;
        if (partial + left * elems_.front() > target_ || partial + left * elems_.back() < target_) return 0;
        Count total = 0;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            total += ordered(used, left - 1, partial + elems_[i]);
            used[i] = 0;
        }
        return total;
    }

private:
    std::span<const Int> elems_;
    const Int& target_;
    std::vector<Int> prefix_;
};

void accumulate_sums(std::span<const Int> elems, std::size_t start, unsigned left, const Int& partial,
                     std::map<Int, Count>& counts) {
    if (left == 0) {
        ++counts[partial];
        return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) accumulate_sums(elems, i, left - 1, partial + elems[i], counts);
}

bool sums_distinct(std::span<const Int> elems, std::size_t start, unsigned left, const Int& partial,
                   std::set<Int>& seen) {
    if (left == 0) return seen.insert(partial).second;
    for (std::size_t i = start; i < elems.size(); ++i) {
        if (!sums_distinct(elems, i, left - 1, partial + elems[i], seen)) return false;
    }
    return true;
}

}  // namespace

FiniteSet::FiniteSet(std::vector<Int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteSet::FiniteSet(std::initializer_list<long long> elements)
    : FiniteSet(std::vector<Int>(elements.begin(), elements.end())) {}

bool FiniteSet::contains(const Int& value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

Int FiniteSet::max_abs() const {
    if (elements_.empty()) return 0;
    return std::max(abs_value(elements_.front()), abs_value(elements_.back()));
}

bool FiniteSet::insert(const Int& value) {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
    if (it != elements_.end() && *it == value) return false;
    elements_.insert(it, value);
    return true;
}

bool FiniteSet::includes(const FiniteSet& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

Count RepHistogram::at(const Int& n) const {
    auto it = counts.find(n);
    return it == counts.end() ? 0 : it->second;
}

Count RepHistogram::total() const {
    Count sum = 0;
    for (const auto& [n, c] : counts) sum += c;
    return sum;
}

Count count_unordered(const FiniteSet& set, unsigned h, const Int& n) {
    require_order(h);
    if (set.empty()) return 0;
    return MultisetWalker(set.elements(), n).unordered(0, h, 0);
}

Count count_ordered(const FiniteSet& set, unsigned h, const Int& n) {
    require_order(h);
    if (set.empty()) return 0;
    return MultisetWalker(set.elements(), n).ordered(0, h, 0, 1);
}

Count count_restricted(const FiniteSet& set, unsigned h, const Int& n) {
    require_order(h);
    if (set.size() < h) return 0;
    return SubsetWalker(set.elements(), n).unordered(0, h, 0);
}

Count count_restricted_ordered(const FiniteSet& set, unsigned h, const Int& n) {
    require_order(h);
    if (set.size() < h) return 0;
    std::vector<char> used(set.size(), 0);
    return SubsetWalker(set.elements(), n).ordered(used, h, 0);
}

RepHistogram histogram(const FiniteSet& set, unsigned h) {
    require_order(h);
    if (set.empty()) throw std::invalid_argument("histogram of the empty set");
    RepHistogram hist{h, {}};
    accumulate_sums(set.elements(), 0, h, 0, hist.counts);
    return hist;
}

std::optional<Int> sidon_collision(const FiniteSet& set, unsigned h) {
    require_order(h);
    if (set.size() <= 1) return std::nullopt;
    for (const auto& [n, c] : histogram(set, h).counts) {
        if (c > 1) return n;
    }
    return std::nullopt;
}

bool is_sidon(const FiniteSet& set, unsigned h) { return !sidon_collision(set, h).has_value(); }

bool is_sidon_fast(const FiniteSet& set, unsigned h) {
    require_order(h);
    std::set<Int> seen;
    return sums_distinct(set.elements(), 0, h, 0, seen);
}

Int sidon_extension_bound(const FiniteSet& set, unsigned h) {
    require_order(h);
    if (set.empty()) throw std::invalid_argument("extension bound of the empty set");
    return (2 * Int(h) - 1) * set.max_abs();
}

Count factorial(unsigned n) {
    Count out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

Count multiset_count(std::size_t size, unsigned h) {
    // C(size + h - 1, h), multiplied out so each partial product stays integral.
    Count out = 1;
    for (unsigned i = 1; i <= h; ++i) out = out * (size + i - 1) / i;
    return out;
}

}  // namespace repbasis
