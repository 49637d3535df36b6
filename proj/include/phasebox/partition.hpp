#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "phasebox/rational.hpp"

namespace phasebox {

// Weakly decreasing list of positive integers; trailing zeros are trimmed on
// construction, so the empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    std::size_t length() const { return parts_.size(); }
    long weight() const;
    // 1-indexed part access; 0 beyond the length.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // Multiplicity view (1^{m_1} 2^{m_2} ...): m[i-1] = m_i for 1 <= i <= max_part.
    std::vector<int> multiplicities(int max_part) const;
    static Partition from_multiplicities(const std::vector<int>& m);

    bool fits_box(int rows, int cols) const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

// mu ≻ nu: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ... (missing parts are 0).
bool interlaces(const Partition& mu, const Partition& nu);

struct TwoPartition {
    Partition first, second;
    long weight() const { return first.weight() + second.weight(); }
    friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
    friend auto operator<=>(const TwoPartition&, const TwoPartition&) = default;
};

// Componentwise interlacing of 2-partitions.
bool interlaces(const TwoPartition& chi, const TwoPartition& chibar);

struct Box {
    int n_rows = 0;   // N
    int n_cols = 0;   // L
    int max_entry = 0;  // M
};

// Matrix of non-negative integers, weakly decreasing along rows and columns;
// rows are trimmed of trailing zeros, trailing empty rows dropped.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    long weight() const;
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const;
    int max_entry() const;
    // 1-indexed; 0 outside the support.
    int entry(std::size_t i, std::size_t j) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool fits(const Box& b) const;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
    friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Diagonal slices: slice i collects entries (k, i+k) for i >= 0 and
// (-i+k, k) for i < 0. Nonempty slices live at lo() <= i <= hi(); the chain
// interlaces upward to slice 0 and downward after it.
struct DiagonalSlices {
    std::vector<Partition> slices;  // index i stored at position i - lo
    int lo = 0;

    int hi() const { return lo + static_cast<int>(slices.size()) - 1; }
    Partition at(int i) const {
        if (i < lo || i > hi()) return Partition{};
        return slices[static_cast<std::size_t>(i - lo)];
    }
    // Padded view pi_{-n} .. pi_{n}.
    std::vector<Partition> padded(int n) const;
};

DiagonalSlices slices(const PlanePartition& pi);
PlanePartition from_slices(const DiagonalSlices& s);

struct UCPlanePartition {
    PlanePartition first, second;
    friend bool operator==(const UCPlanePartition&, const UCPlanePartition&) = default;
};

// All partitions with at most `rows` parts, each at most `cols`;
// C(rows+cols, rows) of them, in lexicographic order of the parts list.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Every plane partition fitting the box, exactly once, in lexicographic order
// of the row-reading of entries.
void for_each_boxed_plane_partition(const Box& b,
                                    const std::function<void(const PlanePartition&)>& fn);
std::vector<PlanePartition> boxed_plane_partitions(const Box& b);

// All plane partitions of weight at most max_weight (support and entries are
// then automatically bounded by max_weight).
std::vector<PlanePartition> plane_partitions_of_weight_at_most(int max_weight);

// Descending interlacing chains pi_0 ≻ pi_1 ≻ ... ≻ pi_len = ∅ with pi_0
// inside the (rows, cols) box. The terminal ∅ is implicit: each chain holds
// `len` partitions, and pi_{len-1} ≻ ∅ forces it to have at most one part.
std::vector<std::vector<Partition>> interlacing_chains(int len, int rows, int cols);

}  // namespace phasebox
