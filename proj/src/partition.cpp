#include "phasebox/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasebox {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::vector<int> Partition::multiplicities(int max_part) const {
    std::vector<int> m(static_cast<std::size_t>(std::max(max_part, 0)), 0);
    for (int p : parts_) {
        if (p > max_part) throw std::invalid_argument("Partition::multiplicities: part too large");
        ++m[static_cast<std::size_t>(p - 1)];
    }
    return m;
}

Partition Partition::from_multiplicities(const std::vector<int>& m) {
    std::vector<int> parts;
    for (int i = static_cast<int>(m.size()); i >= 1; --i) {
        int cnt = m[static_cast<std::size_t>(i - 1)];
        if (cnt < 0) throw std::invalid_argument("Partition: negative multiplicity");
        for (int k = 0; k < cnt; ++k) parts.push_back(i);
    }
    return Partition(std::move(parts));
}

bool Partition::fits_box(int rows, int cols) const {
    if (static_cast<int>(parts_.size()) > rows) return false;
    return parts_.empty() || parts_.front() <= cols;
}

bool interlaces(const Partition& mu, const Partition& nu) {
    std::size_t n = std::max(mu.length(), nu.length()) + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (mu.part(i) < nu.part(i)) return false;
        if (nu.part(i) < mu.part(i + 1)) return false;
    }
    return true;
}

bool interlaces(const TwoPartition& chi, const TwoPartition& chibar) {
    return interlaces(chi.first, chibar.first) && interlaces(chi.second, chibar.second);
}

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (auto& row : rows_) {
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0) throw std::invalid_argument("PlanePartition: negative entry");
            if (j > 0 && row[j - 1] < row[j])
                throw std::invalid_argument("PlanePartition: rows must weakly decrease");
            if (i > 0) {
                int above = j < rows_[i - 1].size() ? rows_[i - 1][j] : 0;
                if (above < row[j])
                    throw std::invalid_argument("PlanePartition: columns must weakly decrease");
            }
        }
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw std::invalid_argument("PlanePartition: columns must weakly decrease");
    }
}

long PlanePartition::weight() const {
    long w = 0;
    for (const auto& row : rows_)
        for (int e : row) w += e;
    return w;
}

std::size_t PlanePartition::col_count() const {
    std::size_t c = 0;
    for (const auto& row : rows_) c = std::max(c, row.size());
    return c;
}

int PlanePartition::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int e : row) m = std::max(m, e);
    return m;
}

int PlanePartition::entry(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > rows_.size()) return 0;
    const auto& row = rows_[i - 1];
    if (j > row.size()) return 0;
    return row[j - 1];
}

bool PlanePartition::fits(const Box& b) const {
    return static_cast<int>(row_count()) <= b.n_rows &&
           static_cast<int>(col_count()) <= b.n_cols && max_entry() <= b.max_entry;
}

std::vector<Partition> DiagonalSlices::padded(int n) const {
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int i = -n; i <= n; ++i) out.push_back(at(i));
    return out;
}

DiagonalSlices slices(const PlanePartition& pi) {
    DiagonalSlices out;
    int r = static_cast<int>(pi.row_count());
    int c = static_cast<int>(pi.col_count());
    if (r == 0) return out;
    out.lo = -(r - 1);
    for (int i = out.lo; i <= c - 1; ++i) {
        std::vector<int> parts;
        for (std::size_t k = 1;; ++k) {
            int e = i >= 0 ? pi.entry(k, static_cast<std::size_t>(i) + k)
                           : pi.entry(static_cast<std::size_t>(-i) + k, k);
            if (e == 0) break;
            parts.push_back(e);
        }
        out.slices.emplace_back(std::move(parts));
    }
    return out;
}

PlanePartition from_slices(const DiagonalSlices& s) {
    int lo = s.lo, hi = s.hi();
    std::size_t n_rows = 0, n_cols = 0;
    for (int i = lo; i <= hi; ++i) {
        const Partition p = s.at(i);
        if (p.empty()) continue;
        if (i >= 0) {
            n_rows = std::max(n_rows, p.length());
            n_cols = std::max(n_cols, p.length() + static_cast<std::size_t>(i));
        } else {
            n_rows = std::max(n_rows, p.length() + static_cast<std::size_t>(-i));
            n_cols = std::max(n_cols, p.length());
        }
    }
    std::vector<std::vector<int>> rows(n_rows, std::vector<int>(n_cols, 0));
    for (std::size_t r = 1; r <= n_rows; ++r)
        for (std::size_t c = 1; c <= n_cols; ++c) {
            int i = static_cast<int>(c) - static_cast<int>(r);
            rows[r - 1][c - 1] = s.at(i).part(std::min(r, c));
        }
    return PlanePartition(std::move(rows));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining_rows, int max_part) {
        out.emplace_back(Partition(cur));
        if (remaining_rows == 0) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            rec(remaining_rows - 1, p);
            cur.pop_back();
        }
    };
    if (rows < 0 || cols < 0) throw std::invalid_argument("partitions_in_box: negative size");
    rec(rows, cols);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

namespace {

// Extend `rows` by every partition row that fits under prev (componentwise,
// length <= prev length, entries <= cap) and recurse.
void extend_plane_partition(std::vector<std::vector<int>>& rows, const std::vector<int>& prev,
                            int cols, int cap, int rows_left, long weight_budget,
                            const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    emit(rows);
    if (rows_left == 0 || prev.empty()) return;
    std::vector<int> row;
    std::function<void(std::size_t, long)> build = [&](std::size_t j, long budget) {
        if (!row.empty()) {
            rows.push_back(row);
            extend_plane_partition(rows, row, cols, cap, rows_left - 1, budget, emit);
            rows.pop_back();
        }
        if (j >= prev.size() || static_cast<int>(j) >= cols) return;
        int hi = std::min(prev[j], j > 0 ? row[j - 1] : cap);
        hi = static_cast<int>(std::min<long>(hi, budget));
        for (int e = 1; e <= hi; ++e) {
            row.push_back(e);
            build(j + 1, budget - e);
            row.pop_back();
        }
    };
    build(0, weight_budget);
}

}  // namespace

void for_each_boxed_plane_partition(const Box& b,
                                    const std::function<void(const PlanePartition&)>& fn) {
    if (b.n_rows < 0 || b.n_cols < 0 || b.max_entry < 0)
        throw std::invalid_argument("for_each_boxed_plane_partition: negative box");
    std::vector<std::vector<int>> rows;
    std::vector<int> top(static_cast<std::size_t>(b.n_cols), b.max_entry);
    long budget = static_cast<long>(b.n_rows) * b.n_cols * b.max_entry;
    std::vector<PlanePartition> collected;
    extend_plane_partition(rows, top, b.n_cols, b.max_entry, b.n_rows, budget,
                           [&](const std::vector<std::vector<int>>& r) {
                               collected.emplace_back(PlanePartition(r));
                           });
    std::sort(collected.begin(), collected.end(),
              [](const PlanePartition& a, const PlanePartition& x) { return a.rows() < x.rows(); });
    for (const auto& pp : collected) fn(pp);
}

std::vector<PlanePartition> boxed_plane_partitions(const Box& b) {
    std::vector<PlanePartition> out;
    for_each_boxed_plane_partition(b, [&](const PlanePartition& pp) { out.push_back(pp); });
    return out;
}

std::vector<PlanePartition> plane_partitions_of_weight_at_most(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("plane_partitions_of_weight_at_most");
    std::vector<PlanePartition> out;
    std::vector<std::vector<int>> rows;
    std::vector<int> top(static_cast<std::size_t>(max_weight), max_weight);
    extend_plane_partition(rows, top, max_weight, max_weight, max_weight, max_weight,
                           [&](const std::vector<std::vector<int>>& r) {
                               out.emplace_back(PlanePartition(r));
                           });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Partition>> interlacing_chains(int len, int rows, int cols) {
    if (len < 0) throw std::invalid_argument("interlacing_chains: negative length");
    std::vector<std::vector<Partition>> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    std::vector<Partition> chain;
    // Appends `left` more partitions below `top`, each interlaced under its
    // predecessor (nu_i in [mu_{i+1}, mu_i]); the implicit terminal is ∅.
    std::function<void(const Partition&, int)> rec = [&](const Partition& top, int left) {
        if (left == 0) {
            if (interlaces(top, Partition{})) out.push_back(chain);
            return;
        }
        std::vector<int> nu;
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
            // Stopping at i parts needs mu_{i+2} = 0 so the 0-tail interlaces.
            if (top.part(i + 2) == 0) {
                Partition cand(nu);
                chain.push_back(cand);
                rec(cand, left - 1);
                chain.pop_back();
            }
            if (i + 1 > top.length()) return;
            int hi = top.part(i + 1);
            int lo_part = top.part(i + 2);
            for (int v = std::max(lo_part, 1); v <= hi; ++v) {
                nu.push_back(v);
                pick(i + 1);
                nu.pop_back();
            }
        };
        pick(0);
    };
    for (const Partition& p0 : partitions_in_box(rows, cols)) {
        chain.push_back(p0);
        rec(p0, len - 1);
        chain.pop_back();
    }
    return out;
}

}  // namespace phasebox
