#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "akblocks/errors.hpp"

namespace akblocks {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing list of positive integers; the empty partition is
// the empty list (no trailing zeros are stored).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<uint32_t> parts);

    const std::vector<uint32_t>& parts() const noexcept { return parts_; }
    uint32_t size() const noexcept;           // sum of parts
    std::size_t num_rows() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<uint32_t> parts_;
};

// Node of a Young diagram: 1-based row and column, 0-based component.
struct Node {
    uint32_t row;
    uint32_t col;
    uint32_t comp;
    auto operator<=>(const Node&) const = default;
};

// An r-tuple of partitions of total size n.
class MultiPartition {
public:
    explicit MultiPartition(std::vector<Partition> components);

    uint32_t r() const noexcept { return static_cast<uint32_t>(components_.size()); }
    uint32_t n() const noexcept;
    const Partition& component(std::size_t k) const { return components_[k]; }
    const std::vector<Partition>& components() const noexcept { return components_; }

    std::vector<Node> nodes() const;

    // Components reversed, each transposed.
    MultiPartition conjugate() const;

    std::string to_string() const;
    static MultiPartition parse(const std::string& text, uint32_t expect_r = 0);

    auto operator<=>(const MultiPartition&) const = default;

private:
    std::vector<Partition> components_;
};

// All r-partitions of n, each exactly once, most of the total size in
// the earliest components first (so ((1),-) precedes (-,(1))).
std::vector<MultiPartition> enumerate_multipartitions(uint32_t n, uint32_t r);

std::vector<Partition> enumerate_partitions(uint32_t n);

// Dominance order: accumulated partial sums across components.
// Requires |lhs| = |rhs| and the same number of components.
bool dominates(const MultiPartition& lhs, const MultiPartition& rhs);

// Standard tableau: entries 1..n increasing along rows and down
// columns within each component.  Stored as one filling per component.
class StandardTableau {
public:
    StandardTableau(const MultiPartition& shape, std::vector<std::vector<std::vector<uint32_t>>> fill);

    const MultiPartition& shape() const noexcept { return shape_; }
    uint32_t entry(const Node& node) const;

    // Entries read along rows, one component after another; a total
    // order on the tableaux of a fixed shape.
    std::vector<uint32_t> row_reading_word() const;

    const std::vector<std::vector<std::vector<uint32_t>>>& fillings() const noexcept { return fill_; }

    bool operator==(const StandardTableau&) const = default;

private:
    MultiPartition shape_;
    std::vector<std::vector<std::vector<uint32_t>>> fill_;
};

// n_lambda by the multinomial-times-hook-length formula.
BigInt count_standard_tableaux(const MultiPartition& shape);

// All standard tableaux in row-reading order.  Refuses shapes with
// more than `cap` nodes.
std::vector<StandardTableau> enumerate_standard_tableaux(const MultiPartition& shape,
                                                         uint32_t cap = 12);

// The row-reading filling itself (1..n along rows of component 1,
// then component 2, ...); the anchor tableau the others are compared
// against.
StandardTableau superstandard_tableau(const MultiPartition& shape);

}  // namespace akblocks
