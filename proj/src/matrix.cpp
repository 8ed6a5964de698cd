#include "ahg/matrix.hpp"

#include <algorithm>
#include <map>

namespace ahg {

void normalize_poly_row(PolyRow& r) {
    if (r.t.empty()) return;
    UniPoly g;
    for (const auto& [c, p] : r.t) {
        g = gcd(g, p);
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0)
        for (auto& [c, p] : r.t) p = p.exact_div(g);
    // Rational content across every coefficient of the row.
    mpz_class num(0), den(1);
    for (const auto& [c, p] : r.t)
        for (const auto& x : p.coeffs()) {
            if (x.is_zero()) continue;
            num = gcd(num, x.num());
            den = lcm(den, x.den());
        }
    Rat content(num, den);
    if (r.t.front().second.leading_coeff().sign() < 0) content = -content;
    if (!content.is_one()) {
        Rat inv = content.inverse();
        for (auto& [c, p] : r.t) p.scale(inv);
    }
}

namespace {

// dst = a*dst - b*src, then renormalized.  Entry at the shared leading column
// cancels by construction when called with a = lead(src), b = lead(dst).
void axpy_rows(PolyRow& dst, const UniPoly& a, const UniPoly& b, const PolyRow& src) {
    PolyRow out;
    out.t.reserve(dst.t.size() + src.t.size());
    auto it = dst.t.cbegin();
    auto jt = src.t.cbegin();
    while (it != dst.t.cend() || jt != src.t.cend()) {
        if (jt == src.t.cend() || (it != dst.t.cend() && it->first < jt->first)) {
            out.t.emplace_back(it->first, a * it->second);
            ++it;
        } else if (it == dst.t.cend() || jt->first < it->first) {
            out.t.emplace_back(jt->first, -(b * jt->second));
            ++jt;
        } else {
            UniPoly v = a * it->second - b * jt->second;
            if (!v.is_zero()) out.t.emplace_back(it->first, std::move(v));
            ++it;
            ++jt;
        }
    }
    normalize_poly_row(out);
    dst = std::move(out);
}

}  // namespace

PolyRref rref_poly_rows(std::vector<PolyRow> rows, int ncols) {
    struct Work {
        PolyRow row;
        int orig;
    };
    // Rows bucketed by leading column.
    std::map<int, std::vector<Work>> buckets;
    int orig = 0;
    for (auto& r : rows) {
        normalize_poly_row(r);
        if (!r.t.empty()) buckets[r.t.front().first].push_back({std::move(r), orig});
        ++orig;
    }

    std::vector<Work> pivot_rows;
    for (int c = 0; c < ncols; ++c) {
        auto bit = buckets.find(c);
        if (bit == buckets.end()) continue;
        std::vector<Work> bucket = std::move(bit->second);
        buckets.erase(bit);
        auto best = std::min_element(bucket.begin(), bucket.end(),
                                     [](const Work& x, const Work& y) { return x.orig < y.orig; });
        Work piv = std::move(*best);
        bucket.erase(best);
        for (auto& w : bucket) {
            axpy_rows(w.row, piv.row.t.front().second, w.row.t.front().second, piv.row);
            if (!w.row.t.empty()) buckets[w.row.t.front().first].push_back(std::move(w));
        }
        pivot_rows.push_back(std::move(piv));
    }

    // Back substitution, right to left; every pivot row used for elimination
    // is already fully reduced, so no new pivot-column entries appear.
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
        pivot_of_col[pivot_rows[i].row.t.front().first] = static_cast<int>(i);
    for (std::size_t i = pivot_rows.size(); i-- > 0;) {
        PolyRow& r = pivot_rows[i].row;
        for (;;) {
            int target = -1;
            for (std::size_t e = 1; e < r.t.size(); ++e)
                if (pivot_of_col[r.t[e].first] >= 0) {
                    target = pivot_of_col[r.t[e].first];
                    break;
                }
            if (target < 0) break;
            const PolyRow& p = pivot_rows[target].row;
            UniPoly b;
            for (const auto& [c, v] : r.t)
                if (c == p.t.front().first) {
                    b = v;
                    break;
                }
            axpy_rows(r, p.t.front().second, b, p);
        }
    }

    PolyRref out;
    out.rows.reserve(pivot_rows.size());
    for (auto& w : pivot_rows) {
        out.pivot_cols.push_back(w.row.t.front().first);
        out.rows.push_back(std::move(w.row));
    }
    return out;
}

std::vector<std::size_t> rref(Matrix<Rat>& m) { return detail::rref_field(m); }

std::vector<std::size_t> rref(Matrix<RatFunc>& m) {
    // Route through the fraction-free engine: clear denominators row-wise,
    // reduce, then divide each row by its pivot entry.
    std::vector<PolyRow> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        UniPoly common(Rat(1));
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.a[i][j].is_zero())
                common = common.exact_div(gcd(common, m.a[i][j].den())) * m.a[i][j].den();
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (m.a[i][j].is_zero()) continue;
            rows[i].t.emplace_back(static_cast<int>(j),
                                   m.a[i][j].num() * common.exact_div(m.a[i][j].den()));
        }
    }
    PolyRref rr = rref_poly_rows(std::move(rows), static_cast<int>(m.cols));
    Matrix<RatFunc> out(rr.rows.size(), m.cols);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rr.rows.size(); ++i) {
        const UniPoly& piv = rr.rows[i].t.front().second;
        for (const auto& [c, p] : rr.rows[i].t)
            out.a[i][static_cast<std::size_t>(c)] = RatFunc(p, piv);
        pivots.push_back(static_cast<std::size_t>(rr.pivot_cols[i]));
    }
    m = std::move(out);
    return pivots;
}

}  // namespace ahg
