#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rgra {

// Arithmetic in Z/p for a prime p < 2^31.
struct ModP {
    using value_type = std::uint32_t;
    std::uint32_t p;

    explicit ModP(std::uint32_t prime) : p(prime) {}
    value_type from(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<value_type>(r);
    }
    value_type from(const mpq_class& q) const {
        mpz_class n = q.get_num() % p, d = q.get_den() % p;
        if (n < 0) n += p;
        if (d == 0) throw std::domain_error("denominator vanishes mod p");
        return mul(static_cast<value_type>(n.get_ui()), inv(static_cast<value_type>(d.get_ui())));
    }
    static bool is_zero(value_type a) { return a == 0; }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t(a) * b) % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr) {
            std::int64_t q = r / nr;
            std::tie(t, nt) = std::make_pair(nt, t - q * nt);
            std::tie(r, nr) = std::make_pair(nr, r - q * nr);
        }
        if (t < 0) t += p;
        return static_cast<value_type>(t);
    }
    // larger is worse when choosing among equal-cost pivots
    static int weight(value_type) { return 0; }
};

struct Rational {
    using value_type = mpq_class;
    value_type from(const mpq_class& q) const { return q; }
    value_type from(long v) const { return value_type(v); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    static int weight(const value_type& a) {
        return static_cast<int>(mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2));
    }
};

// Sparse Gaussian elimination with a Markowitz-style pivot rule: the active
// column of least count is pivoted on its shortest row, preferring small
// entries. Columns with index >= `pivotable` are carried along (right-hand
// sides) but never chosen as pivots.
template <class F>
class Eliminator {
public:
    using V = typename F::value_type;
    using Row = std::vector<std::pair<int, V>>;

    Eliminator(F field, int ncols, int pivotable, std::vector<Row> rows)
        : f_(std::move(field)), ncols_(ncols), npiv_(pivotable), rows_(std::move(rows)) {}

    void run() {
        const int R = static_cast<int>(rows_.size());
        active_.assign(R, 1);
        col_rows_.assign(ncols_, {});
        count_.assign(ncols_, 0);
        done_.assign(ncols_, 0);
        dirty_.assign(ncols_, 0);
        for (int i = 0; i < R; ++i) {
            auto& row = rows_[i];
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [c, v] : row) {
                if (c < 0 || c >= ncols_) throw std::out_of_range("column index");
                col_rows_[c].push_back(i);
                if (c < npiv_) ++count_[c];
            }
        }
        for (int c = 0; c < npiv_; ++c)
            if (count_[c] > 0) heap_.push({count_[c], c});

        std::vector<int> touched;
        std::vector<std::pair<int, int>> cand;
        while (!heap_.empty()) {
            // Look at a few columns of least count and take the pivot of
            // least Markowitz cost (count - 1) * (row length - 1).
            cand.clear();
            while (!heap_.empty() && static_cast<int>(cand.size()) < kCandidates) {
                auto [cnt, c] = heap_.top();
                heap_.pop();
                if (done_[c] || cnt != count_[c] || cnt == 0) continue;
                if (!cand.empty() && cand.back().second == c) continue;
                cand.emplace_back(cnt, c);
                if (cnt == 1) break;
            }
            if (cand.empty()) break;
            int best = -1, best_c = -1;
            long best_cost = 0;
            int best_w = 0;
            for (auto [cnt, c] : cand) {
                auto& lst = col_rows_[c];
                std::size_t w = 0;
                for (std::size_t t = 0; t < lst.size(); ++t) {
                    int i = lst[t];
                    if (!active_[i]) continue;
                    const V* e = entry(i, c);
                    if (!e) continue;
                    lst[w++] = i;
                    long cost = long(cnt - 1) * long(rows_[i].size() - 1);
                    int wt = F::weight(*e);
                    if (best < 0 || cost < best_cost || (cost == best_cost && wt < best_w)) {
                        best = i;
                        best_c = c;
                        best_cost = cost;
                        best_w = wt;
                    }
                }
                lst.resize(w);
            }
            for (auto [cnt, c] : cand)
                if (c != best_c) heap_.push({count_[c], c});
            if (best < 0) {
                for (auto [cnt, c] : cand) count_[c] = 0;
                continue;
            }
            pivot_on(best, best_c, touched);
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }

    // Entries left in non-pivot rows live only in right-hand-side columns.
    bool rhs_consistent(int rhs_col) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!active_[i]) continue;
            if (entry(static_cast<int>(i), rhs_col)) return false;
        }
        return true;
    }

    // Entries of a right-hand-side column left in non-pivot rows, keyed by
    // row; empty exactly when the column lies in the pivot span.
    std::vector<std::pair<int, V>> residual(int rhs_col) const {
        std::vector<std::pair<int, V>> out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!active_[i]) continue;
            if (const V* e = entry(static_cast<int>(i), rhs_col)) out.emplace_back(static_cast<int>(i), *e);
        }
        return out;
    }

    // Back-substitution for the right-hand side in column `rhs_col`; free
    // variables are set to zero.
    std::optional<std::vector<V>> solve(int rhs_col) const {
        if (!rhs_consistent(rhs_col)) return std::nullopt;
        return back_substitute(std::vector<V>(npiv_, V(0)), rhs_col);
    }

    // Solves for the pivot variables given values of the free ones in `y`,
    // against right-hand-side column `rhs_col` (-1 for a homogeneous system).
    std::vector<V> back_substitute(std::vector<V> y, int rhs_col = -1) const {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            auto [r, c] = *it;
            V acc(0);
            V pv(0);
            for (const auto& [cc, v] : rows_[r]) {
                if (cc == c) pv = v;
                else if (cc == rhs_col) acc = f_.add(acc, v);
                else if (cc < npiv_ && !F::is_zero(y[cc])) acc = f_.sub(acc, f_.mul(v, y[cc]));
            }
            y[c] = f_.mul(acc, f_.inv(pv));
        }
        return y;
    }

private:
    const V* entry(int i, int c) const {
        const auto& row = rows_[i];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }

    void bump(int c, int delta) {
        if (c >= npiv_ || done_[c]) return;
        count_[c] += delta;
        if (!dirty_[c]) {
            dirty_[c] = 1;
            dirty_list_.push_back(c);
        }
    }

    void flush() {
        for (int c : dirty_list_) {
            dirty_[c] = 0;
            if (!done_[c] && count_[c] > 0) heap_.push({count_[c], c});
        }
        dirty_list_.clear();
    }

    void pivot_on(int r, int c, std::vector<int>& touched) {
        active_[r] = 0;
        done_[c] = 1;
        for (const auto& [cc, v] : rows_[r])
            if (cc != c) bump(cc, -1);
        const Row& piv = rows_[r];
        V pinv = f_.inv(*entry(r, c));
        touched.clear();
        for (int i : col_rows_[c]) {
            if (!active_[i] || i == r) continue;
            const V* e = entry(i, c);
            if (!e) continue;
            touched.push_back(i);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        Row merged;
        for (int i : touched) {
            Row& row = rows_[i];
            V factor = f_.mul(*entry(i, c), pinv);
            merged.clear();
            merged.reserve(row.size() + piv.size());
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    merged.push_back(std::move(row[a++]));
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    int cc = piv[b].first;
                    merged.emplace_back(cc, f_.neg(f_.mul(factor, piv[b].second)));
                    col_rows_[cc].push_back(i);
                    bump(cc, +1);
                    ++b;
                } else {
                    int cc = row[a].first;
                    V nv = f_.sub(row[a].second, f_.mul(factor, piv[b].second));
                    if (F::is_zero(nv)) bump(cc, -1);
                    else merged.emplace_back(cc, std::move(nv));
                    ++a;
                    ++b;
                }
            }
            row.swap(merged);
        }
        col_rows_[c].clear();
        col_rows_[c].shrink_to_fit();
        flush();
        pivots_.emplace_back(r, c);
    }

    static constexpr int kCandidates = 8;

    F f_;
    int ncols_;
    int npiv_;
    std::vector<Row> rows_;
    std::vector<char> active_;
    std::vector<std::vector<int>> col_rows_;
    std::vector<int> count_;
    std::vector<char> done_;
    std::vector<char> dirty_;
    std::vector<int> dirty_list_;
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap_;
    std::vector<std::pair<int, int>> pivots_;
};

}  // namespace rgra
