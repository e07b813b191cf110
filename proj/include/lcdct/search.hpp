#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lcdct/dct.hpp"
#include "lcdct/dyadic.hpp"
#include "lcdct/matrix.hpp"

namespace lcdct {

/// One of the low-complexity multiplier sets d1..d6. Elements are kept sorted
/// ascending; every set contains 0 and is symmetric about it.
struct MultiplierSet {
    std::string name;
    std::vector<Dyadic> elements;

    std::size_t size() const { return elements.size(); }

    /// The nonnegative elements (zero included), ascending.
    std::vector<Dyadic> positive_half() const {
        std::vector<Dyadic> out;
        for (const Dyadic& d : elements)
            if (!(d < Dyadic(0))) out.push_back(d);
        return out;
    }
};

inline MultiplierSet multiplier_set(const std::string& name) {
    const Dyadic zero(0), one(1), two(2), half(1, -1), quarter(1, -2);
    std::vector<Dyadic> pos;
    if (name == "d1") pos = {one};
    else if (name == "d2") pos = {half, one};
    else if (name == "d3") pos = {one, two};
    else if (name == "d4") pos = {quarter, half, one};
    else if (name == "d5") pos = {half, one, two};
    else if (name == "d6") pos = {quarter, half, one, two};
    else throw std::invalid_argument("multiplier_set: unknown set '" + name + "' (use d1..d6)");
    std::vector<Dyadic> all;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) all.push_back(-*it);
    all.push_back(zero);
    for (const Dyadic& d : pos) all.push_back(d);
    return MultiplierSet{name, std::move(all)};
}

/// Angle in radians between two nonzero vectors of equal length, clamped
/// against rounding so the result lies in [0, pi].
inline double angle(std::span<const double> p, std::span<const double> c) {
    if (p.size() != c.size()) throw std::invalid_argument("angle: length mismatch");
    double dot = 0.0, sp = 0.0, sc = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        dot += p[j] * c[j];
        sp += p[j] * p[j];
        sc += c[j] * c[j];
    }
    if (sp == 0.0 || sc == 0.0) throw std::invalid_argument("angle: zero vector");
    const double np = std::sqrt(sp);
    const double nc = std::sqrt(sc);
    double q = dot / (np * nc);
    q = std::min(1.0, std::max(-1.0, q));
    return std::acos(q);
}

/// |D|^N as a decimal string (the count overflows 64 bits well before N=64).
inline std::string candidate_count(std::size_t n, const MultiplierSet& set) {
    std::vector<std::uint32_t> limbs{1};  // base 1e9, little-endian
    const std::uint64_t d = set.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t v = static_cast<std::uint64_t>(limb) * d + carry;
            limb = static_cast<std::uint32_t>(v % 1000000000u);
            carry = v / 1000000000u;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
            carry /= 1000000000u;
        }
    }
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

struct SearchResult {
    DyadicMatrix t;
    std::vector<double> row_angles;
    MultiplierSet set;
    bool reduced = false;
};

namespace detail {

constexpr double kEnumerationBudget = 1e10;

/// |elements|^length if it stays within the enumeration budget, else 0.
inline std::uint64_t enumeration_size(std::size_t base, std::size_t length) {
    long double acc = 1.0L;
    for (std::size_t i = 0; i < length; ++i) {
        acc *= static_cast<long double>(base);
        if (acc > static_cast<long double>(kEnumerationBudget)) return 0;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Row-wise minimal-angle scan over the candidate grid vals^m against a set
/// of target rows. Candidates are enumerated in lexicographic order (position
/// 0 most significant, digits over vals ascending); the first candidate
/// attaining a strictly smaller angle wins, so ties keep the lowest index.
/// Partial dot products are accumulated left-to-right per depth, which makes
/// the arithmetic identical to evaluating each candidate's angle naively.
///
/// Two provably conservative shortcuts keep the scan fast without changing
/// its output: a per-row guard threshold that skips the exact cosine test
/// whenever rounding cannot flip the comparison, and a Cauchy-Schwarz bound
/// on whole subtrees evaluated at a few fixed depths. Both use margins wide
/// enough that any candidate the naive loop would accept is still evaluated
/// exactly, so the result is bitwise identical for any worker count.
class RowMinScan {
public:
    RowMinScan(const RealMatrix& targets_rows_by_len, std::vector<double> vals)
        : vals_(std::move(vals)),
          rows_(targets_rows_by_len.rows()),
          m_(targets_rows_by_len.cols()) {
        cols_.assign(m_ * rows_, 0.0);
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t k = 0; k < rows_; ++k) cols_[j * rows_ + k] = targets_rows_by_len(k, j);
        normh_.resize(rows_);
        for (std::size_t k = 0; k < rows_; ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j < m_; ++j)
                s += targets_rows_by_len(k, j) * targets_rows_by_len(k, j);
            normh_[k] = std::sqrt(s);
        }
        // suffix squared target mass, used only inside the subtree bound
        suffh2_.assign((m_ + 1) * rows_, 0.0);
        for (std::size_t d = m_; d-- > 0;)
            for (std::size_t k = 0; k < rows_; ++k)
                suffh2_[d * rows_ + k] = suffh2_[(d + 1) * rows_ + k] +
                                         cols_[d * rows_ + k] * cols_[d * rows_ + k];
        // every multiplier value has 16*v^2 integral, so squared candidate
        // norms live on a 1/16 grid and their square roots can be tabulated
        sq16_.resize(vals_.size());
        int max16 = 0;
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            const double s16 = vals_[i] * vals_[i] * 16.0;
            sq16_[i] = static_cast<int>(s16);
            if (static_cast<double>(sq16_[i]) != s16)
                throw std::invalid_argument("search: multiplier grid must be dyadic over 1/4");
            max16 = std::max(max16, sq16_[i]);
        }
        sqrt_table_.resize(static_cast<std::size_t>(max16) * m_ + 1);
        for (std::size_t i = 0; i < sqrt_table_.size(); ++i)
            sqrt_table_[i] = std::sqrt(static_cast<double>(i) / 16.0);
        // subtree bound checkpoints, sparse enough to stay off the hot path
        for (std::size_t d = 6; d + 2 < m_; d += 4) prune_depths_.push_back(d);
    }

    struct Best {
        double angle = std::numeric_limits<double>::infinity();
        double cosine = -2.0;
        std::uint64_t index = 0;
        std::vector<std::uint8_t> digits;
    };

    std::uint64_t digit_count() const { return vals_.size(); }

    std::vector<Best> scan(std::uint64_t begin, std::uint64_t end) const {
        std::vector<Best> best(rows_);
        if (begin >= end) return best;
        const std::size_t nd = vals_.size();
        const std::size_t m = m_;
        const std::size_t rows = rows_;

        std::vector<std::uint8_t> digits(m, 0);
        std::uint64_t idx = begin;
        auto decompose = [&] {
            std::uint64_t v = idx;
            for (std::size_t j = m; j-- > 0;) {
                digits[j] = static_cast<std::uint8_t>(v % nd);
                v /= nd;
            }
        };
        decompose();

        // part[d]: dot after positions [0, d); aliases the previous level when
        // the digit contributes zero, preserving left-to-right accumulation.
        std::vector<double> bufs((m + 1) * rows, 0.0);
        std::vector<const double*> part(m + 1);
        std::vector<int> isq(m + 1, 0);  // 16 * squared candidate norm, exact
        part[0] = bufs.data();

        auto refresh = [&](std::size_t from) {
            for (std::size_t d = from; d < m; ++d) {
                const double v = vals_[digits[d]];
                isq[d + 1] = isq[d] + sq16_[digits[d]];
                if (v == 0.0) {
                    part[d + 1] = part[d];
                    continue;
                }
                const double* __restrict prev = part[d];
                const double* __restrict col = cols_.data() + d * rows;
                double* __restrict out = bufs.data() + (d + 1) * rows;
                for (std::size_t k = 0; k < rows; ++k) out[k] = prev[k] + v * col[k];
                part[d + 1] = out;
            }
        };
        refresh(0);

        std::vector<double> guard(rows);
        auto set_guard = [&](std::size_t k) {
            const double a = best[k].cosine * normh_[k];
            constexpr double kEps = std::numeric_limits<double>::epsilon();
            guard[k] = a - 8.0 * kEps * (std::abs(a) + normh_[k]);
        };
        for (std::size_t k = 0; k < rows; ++k) set_guard(k);

        // Subtree bound at depth d: for any completion of the current prefix,
        // dot/normp <= sqrt(pd^2/sq + remaining target mass). When that bound
        // sits below every row's guard (with slack for its own rounding), no
        // leaf below can pass the exact test and the subtree is skipped.
        auto subtree_dead = [&](std::size_t d) {
            if (isq[d] == 0) return false;
            const double sq = static_cast<double>(isq[d]) / 16.0;
            const double* pd = part[d];
            const double* sh = suffh2_.data() + d * rows;
            for (std::size_t k = 0; k < rows; ++k) {
                if (guard[k] <= 0.0) return false;
                const double bound2 = pd[k] * pd[k] / sq + sh[k];
                if (bound2 >= guard[k] * guard[k] * (1.0 - 1e-12)) return false;
            }
            return true;
        };

        std::vector<std::uint64_t> stride(m + 1, 1);
        for (std::size_t d = m; d-- > 0;) stride[d] = stride[d + 1] * nd;

        std::size_t changed_from = 0;  // lowest position whose digit changed
        while (true) {
            bool jumped = false;
            for (const std::size_t d : prune_depths_) {
                if (d < changed_from + 1) continue;  // prefix unchanged since last check
                if (!subtree_dead(d)) continue;
                const std::uint64_t next = (idx / stride[d] + 1) * stride[d];
                if (next >= end) return best;
                idx = next;
                decompose();
                refresh(0);
                changed_from = 0;
                jumped = true;
                break;
            }
            if (jumped) continue;
            changed_from = m;  // checks stay valid until a lower digit moves

            if (isq[m] != 0) {
                const double normp = sqrt_table_[static_cast<std::size_t>(isq[m])];
                const double* __restrict dots = part[m];
                const double* __restrict g = guard.data();
                int hits = 0;
                for (std::size_t k = 0; k < rows; ++k) hits += dots[k] > g[k] * normp;
                if (hits) {
                    for (std::size_t k = 0; k < rows; ++k) {
                        if (!(dots[k] > g[k] * normp)) continue;
                        const double q = dots[k] / (normp * normh_[k]);
                        Best& b = best[k];
                        if (q > b.cosine) {
                            const double th = std::acos(std::min(1.0, std::max(-1.0, q)));
                            if (th < b.angle) {
                                b.angle = th;
                                b.cosine = q;
                                b.index = idx;
                                b.digits = digits;
                                set_guard(k);
                            }
                        }
                    }
                }
            }
            if (++idx == end) break;
            std::size_t p = m - 1;
            while (digits[p] == nd - 1) {
                digits[p] = 0;
                --p;
            }
            ++digits[p];
            refresh(p);
            changed_from = p;
        }
        return best;
    }

    /// Deterministic reduction regardless of how the range was partitioned.
    static void merge(std::vector<Best>& into, const std::vector<Best>& other) {
        for (std::size_t k = 0; k < into.size(); ++k) {
            const Best& o = other[k];
            Best& b = into[k];
            if (o.angle < b.angle || (o.angle == b.angle && o.index < b.index)) b = o;
        }
    }

    std::vector<Best> scan_parallel(std::uint64_t total, unsigned workers) const {
        if (workers <= 1 || total < 2 * workers) return scan(0, total);
        const std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::vector<Best>> partials(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t b = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t e = std::min(total, b + chunk);
            pool.emplace_back([this, w, b, e, &partials] {
                if (b < e) partials[w] = scan(b, e);
            });
        }
        for (auto& t : pool) t.join();
        std::vector<Best> out(rows_);
        for (const auto& p : partials)
            if (!p.empty()) merge(out, p);
        return out;
    }

private:
    std::vector<double> vals_;
    std::size_t rows_, m_;
    std::vector<double> cols_;     // position-major targets, m x rows
    std::vector<double> normh_;
    std::vector<double> suffh2_;   // (m+1) x rows suffix squared mass
    std::vector<int> sq16_;        // 16 * value^2 per digit
    std::vector<double> sqrt_table_;
    std::vector<std::size_t> prune_depths_;
};

inline unsigned resolve_workers(unsigned workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace detail

/// Unconstrained minimal-angle row search: for every row of the exact DCT,
/// scan all of D^N (lexicographic over D ascending) and keep the candidate
/// with the smallest angle, first index winning ties. The zero candidate is
/// skipped. Output is identical for any worker count.
inline SearchResult greedy_row_search(const RealMatrix& c, const MultiplierSet& set,
                                      unsigned workers = 0) {
    const std::size_t n = c.rows();
    if (c.cols() != n) throw std::invalid_argument("greedy_row_search: target must be square");
    const std::uint64_t total = detail::enumeration_size(set.size(), n);
    if (total == 0)
        throw std::length_error("greedy_row_search: " + candidate_count(n, set) +
                                " candidate rows exceed the enumeration budget of 1e10; "
                                "use reduced_search");
    std::vector<double> vals;
    for (const Dyadic& d : set.elements) vals.push_back(d.to_double());
    detail::RowMinScan scan(c, vals);
    auto best = scan.scan_parallel(total, detail::resolve_workers(workers));

    SearchResult res;
    res.t = DyadicMatrix(n, n);
    res.row_angles.resize(n);
    res.set = set;
    res.reduced = false;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) res.t(k, j) = set.elements[best[k].digits[j]];
        res.row_angles[k] = best[k].angle;
    }
    return res;
}

/// Reduced search: factor each DCT row into sign and magnitude, exploit the
/// mirror symmetry |c_k[j]| = |c_k[N-1-j]| to enumerate only the first N/2
/// magnitudes over the nonnegative half of D, then restore the signs.
/// The reported angles are recomputed on the full-length rows.
inline SearchResult reduced_search(const RealMatrix& c, const MultiplierSet& set,
                                   unsigned workers = 0) {
    const std::size_t n = c.rows();
    if (c.cols() != n || n % 2 != 0)
        throw std::invalid_argument("reduced_search: target must be square with even size");
    const std::size_t m = n / 2;
    const std::vector<Dyadic> pos = [&] {
        MultiplierSet s = set;
        return s.positive_half();
    }();
    const std::uint64_t total = detail::enumeration_size(pos.size(), m);
    if (total == 0)
        throw std::length_error("reduced_search: half-row candidate count exceeds the "
                                "enumeration budget of 1e10");

    RealMatrix habs(n, m);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j) habs(k, j) = std::abs(c(k, j));
    std::vector<double> vals;
    for (const Dyadic& d : pos) vals.push_back(d.to_double());
    detail::RowMinScan scan(habs, vals);
    auto best = scan.scan_parallel(total, detail::resolve_workers(workers));

    SearchResult res;
    res.t = DyadicMatrix(n, n);
    res.row_angles.resize(n);
    res.set = set;
    res.reduced = true;
    std::vector<double> full(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            const Dyadic mag = pos[best[k].digits[j]];
            for (const std::size_t col : {j, n - 1 - j}) {
                const double sgn = c(k, col);
                res.t(k, col) = sgn > 0.0 ? mag : (sgn < 0.0 ? -mag : Dyadic(0));
            }
        }
        for (std::size_t j = 0; j < n; ++j) full[j] = res.t(k, j).to_double();
        std::vector<double> crow(n);
        for (std::size_t j = 0; j < n; ++j) crow[j] = c(k, j);
        res.row_angles[k] = angle(full, crow);
    }
    return res;
}

/// Orthogonality-constrained variant: rows are selected in the given order,
/// each candidate must have exactly zero dyadic inner product with all rows
/// chosen before it, and the minimal angle wins among the feasible ones.
/// Exhaustive per row, so only small blocklengths are accepted.
inline SearchResult constrained_search(const RealMatrix& c, const MultiplierSet& set,
                                       const std::vector<std::size_t>& row_order) {
    const std::size_t n = c.rows();
    if (c.cols() != n) throw std::invalid_argument("constrained_search: target must be square");
    if (n > 8)
        throw std::invalid_argument("constrained_search: exhaustive orthogonality screening "
                                    "is feasible for blocklengths up to 8 only");
    {
        std::vector<bool> seen(n, false);
        if (row_order.size() != n)
            throw std::invalid_argument("constrained_search: row_order must list every row once");
        for (std::size_t r : row_order) {
            if (r >= n || seen[r])
                throw std::invalid_argument("constrained_search: row_order is not a permutation");
            seen[r] = true;
        }
    }
    const std::uint64_t total = detail::enumeration_size(set.size(), n);
    if (total == 0)
        throw std::length_error("constrained_search: candidate count exceeds the budget of 1e10");

    // scaled-by-4 integer copies make the orthogonality screen an exact
    // integer dot product (every d1..d6 element is a multiple of 1/4)
    std::vector<int> ivals;
    std::vector<double> dvals;
    for (const Dyadic& d : set.elements) {
        const double v = d.to_double() * 4.0;
        ivals.push_back(static_cast<int>(v));
        dvals.push_back(d.to_double());
    }

    SearchResult res;
    res.t = DyadicMatrix(n, n);
    res.row_angles.assign(n, 0.0);
    res.set = set;
    res.reduced = false;

    std::vector<std::vector<int>> chosen;  // scaled rows, in selection order
    std::vector<double> p(n), crow(n);
    std::vector<std::uint8_t> digits(n);
    for (std::size_t pos_in_order = 0; pos_in_order < n; ++pos_in_order) {
        const std::size_t k = row_order[pos_in_order];
        for (std::size_t j = 0; j < n; ++j) crow[j] = c(k, j);
        double best_angle = std::numeric_limits<double>::infinity();
        std::vector<std::uint8_t> best_digits;
        std::fill(digits.begin(), digits.end(), 0);
        for (std::uint64_t idx = 0;; ++idx) {
            bool zero = true;
            for (std::size_t j = 0; j < n; ++j)
                if (ivals[digits[j]] != 0) { zero = false; break; }
            if (!zero) {
                bool feasible = true;
                for (const auto& prev : chosen) {
                    long long dot = 0;
                    for (std::size_t j = 0; j < n; ++j) dot += static_cast<long long>(ivals[digits[j]]) * prev[j];
                    if (dot != 0) { feasible = false; break; }
                }
                if (feasible) {
                    for (std::size_t j = 0; j < n; ++j) p[j] = dvals[digits[j]];
                    const double th = angle(p, crow);
                    if (th < best_angle) {
                        best_angle = th;
                        best_digits = digits;
                    }
                }
            }
            if (idx + 1 == total) break;
            std::size_t d = n - 1;
            while (digits[d] == set.size() - 1) { digits[d] = 0; --d; }
            ++digits[d];
        }
        if (best_digits.empty()) {
            std::string order;
            for (std::size_t r : row_order) order += std::to_string(r) + " ";
            throw std::runtime_error("constrained_search: no feasible candidate for row " +
                                     std::to_string(k) + " under order [ " + order + "]");
        }
        std::vector<int> srow(n);
        for (std::size_t j = 0; j < n; ++j) {
            res.t(k, j) = set.elements[best_digits[j]];
            srow[j] = ivals[best_digits[j]];
        }
        chosen.push_back(std::move(srow));
        res.row_angles[k] = best_angle;
    }
    return res;
}

/// Group low-complexity kernels whose normalized transforms agree entrywise
/// within 1e-10; returns index classes in first-seen order.
inline std::vector<std::vector<std::size_t>> group_equivalence_classes(
        const std::vector<DyadicMatrix>& candidates) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<RealMatrix> reps;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].rows() != candidates[0].rows() ||
            candidates[i].cols() != candidates[0].cols())
            throw std::invalid_argument("group_equivalence_classes: size mismatch");
        RealMatrix ch = orthogonalize(candidates[i]).c_hat;
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (max_abs_diff(ch, reps[c]) < 1e-10) {
                classes[c].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({i});
            reps.push_back(std::move(ch));
        }
    }
    return classes;
}

}  // namespace lcdct
