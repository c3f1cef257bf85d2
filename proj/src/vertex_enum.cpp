#include <algorithm>
#include <cstdint>

#include "nscert/polytope.hpp"

namespace nscert {

namespace {

struct Ray {
    std::vector<Rat> coords;       // homogeneous: index 0 is the vertex scale t
    std::vector<std::uint32_t> tight; // sorted indices of inserted rows tight at this ray
};

Rat dot_row(const std::vector<Rat>& row, const std::vector<Rat>& v) {
    Rat acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        acc += row[i] * v[i];
    return acc;
}

void normalize_ray(std::vector<Rat>& v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0)
        return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& c : v)
        c *= scale;
}

std::vector<std::uint32_t> tight_intersection(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const std::vector<std::uint32_t>& small, const std::vector<std::uint32_t>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Double description over the homogenized cone {r : R r >= 0} in R^{dim}.
/// Rows must span R^{dim} so the cone is pointed.
std::vector<Ray> double_description(const std::vector<std::vector<Rat>>& rows, std::size_t dim) {
    // Pick dim linearly independent rows for the simplicial start.
    std::vector<std::size_t> chosen;
    {
        std::vector<std::vector<Rat>> elim; // running row echelon of chosen rows
        for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r) {
            std::vector<Rat> cand = rows[r];
            for (const auto& e : elim) {
                std::size_t lead = 0;
                while (lead < dim && e[lead] == 0)
                    ++lead;
                if (lead < dim && cand[lead] != 0) {
                    const Rat f = cand[lead] / e[lead];
                    for (std::size_t c = lead; c < dim; ++c)
                        cand[c] -= f * e[c];
                }
            }
            if (std::any_of(cand.begin(), cand.end(), [](const Rat& x) { return x != 0; })) {
                elim.push_back(std::move(cand));
                std::sort(elim.begin(), elim.end(), [](const auto& a, const auto& b) {
                    auto lead = [](const auto& v) {
                        std::size_t i = 0;
                        while (i < v.size() && v[i] == 0)
                            ++i;
                        return i;
                    };
                    return lead(a) < lead(b);
                });
                chosen.push_back(r);
            }
        }
        if (chosen.size() < dim)
            throw Error("vertex enumeration: cone is not pointed");
    }

    // Rays of the simplicial cone: columns of the inverse of the chosen rows.
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(2 * dim, Rat(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            m[i][j] = rows[chosen[i]][j];
        m[i][dim + i] = 1;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && m[pivot][col] == 0)
            ++pivot;
        if (pivot == dim)
            throw Error("vertex enumeration: singular start basis");
        std::swap(m[col], m[pivot]);
        const Rat inv = 1 / m[col][col];
        for (std::size_t c = 0; c < 2 * dim; ++c)
            m[col][c] *= inv;
        for (std::size_t r2 = 0; r2 < dim; ++r2) {
            if (r2 == col || m[r2][col] == 0)
                continue;
            const Rat f = m[r2][col];
            for (std::size_t c = 0; c < 2 * dim; ++c)
                m[r2][c] -= f * m[col][c];
        }
    }

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        Ray ray;
        ray.coords.resize(dim);
        for (std::size_t i = 0; i < dim; ++i)
            ray.coords[i] = m[i][dim + j]; // inverse column j
        normalize_ray(ray.coords);
        for (std::size_t i = 0; i < dim; ++i)
            if (i != j)
                ray.tight.push_back(static_cast<std::uint32_t>(chosen[i]));
        std::sort(ray.tight.begin(), ray.tight.end());
        rays.push_back(std::move(ray));
    }

    std::vector<bool> inserted(rows.size(), false);
    for (std::size_t r : chosen)
        inserted[r] = true;

    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (inserted[r])
            continue;
        inserted[r] = true;

        std::vector<Rat> value(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            value[i] = dot_row(rows[r], rays[i].coords);

        std::vector<Ray> next;
        std::vector<std::size_t> pos_idx, neg_idx;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] > 0) {
                pos_idx.push_back(i);
                next.push_back(rays[i]);
            } else if (value[i] == 0) {
                Ray kept = rays[i];
                kept.tight.insert(
                    std::lower_bound(kept.tight.begin(), kept.tight.end(),
                                     static_cast<std::uint32_t>(r)),
                    static_cast<std::uint32_t>(r));
                next.push_back(std::move(kept));
            } else {
                neg_idx.push_back(i);
            }
        }

        for (std::size_t pi : pos_idx) {
            for (std::size_t ni : neg_idx) {
                const auto common = tight_intersection(rays[pi].tight, rays[ni].tight);
                bool adjacent = true;
                for (std::size_t w = 0; w < rays.size(); ++w) {
                    if (w == pi || w == ni)
                        continue;
                    if (subset_of(common, rays[w].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent)
                    continue;
                Ray blend;
                blend.coords.resize(dim);
                const Rat wp = value[pi], wn = -value[ni];
                for (std::size_t c = 0; c < dim; ++c)
                    blend.coords[c] = wn * rays[pi].coords[c] + wp * rays[ni].coords[c];
                normalize_ray(blend.coords);
                blend.tight = common;
                blend.tight.insert(std::lower_bound(blend.tight.begin(), blend.tight.end(),
                                                    static_cast<std::uint32_t>(r)),
                                   static_cast<std::uint32_t>(r));
                next.push_back(std::move(blend));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

} // namespace

std::vector<EnumeratedVertex> enumerate_vertices(const ConstraintSystem& cs,
                                                 const VertexEnumOptions& opt) {
    const std::uint64_t n = cs.scenario.event_count();
    if (n > opt.dimension_cap)
        throw DimensionCap("n_seq " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(opt.dimension_cap));

    // Eliminate the equality rows: x = x0 + B z with B a kernel basis.
    std::vector<std::vector<Rat>> eq;
    for (const auto& row : cs.rows) {
        if (!row.equality)
            continue;
        std::vector<Rat> dense(n, Rat(0));
        for (const auto& [idx, c] : row.coeffs)
            dense[idx] = c;
        eq.push_back(std::move(dense));
    }
    const BoxVector x0 = uniform_box(cs.scenario);
    const auto kernel = rational_kernel(eq, n);
    const std::size_t k = kernel.size();

    // Homogenized cone over z-space: t >= 0 and x0_i t + (B z)_i >= 0.
    std::vector<std::vector<Rat>> rows;
    {
        std::vector<Rat> t_row(k + 1, Rat(0));
        t_row[0] = 1;
        rows.push_back(std::move(t_row));
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<Rat> row(k + 1);
        row[0] = x0.rational_entries[i];
        for (std::size_t j = 0; j < k; ++j)
            row[j + 1] = kernel[j][i];
        rows.push_back(std::move(row));
    }

    const auto rays = double_description(rows, k + 1);

    std::vector<EnumeratedVertex> out;
    for (const auto& ray : rays) {
        if (ray.coords[0] == 0)
            throw Error("vertex enumeration: unbounded direction in a polytope");
        std::vector<Rat> x(n);
        bool nonlocal = false;
        for (std::uint64_t i = 0; i < n; ++i) {
            Rat v = x0.rational_entries[i] * ray.coords[0];
            for (std::size_t j = 0; j < k; ++j)
                v += kernel[j][i] * ray.coords[j + 1];
            v /= ray.coords[0];
            if (v != 0 && v != 1)
                nonlocal = true;
            x[i] = std::move(v);
        }
        out.push_back({make_rational_box(cs.scenario, std::move(x)), nonlocal});
    }

    std::sort(out.begin(), out.end(), [](const EnumeratedVertex& a, const EnumeratedVertex& b) {
        return a.box.rational_entries < b.box.rational_entries;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const EnumeratedVertex& a, const EnumeratedVertex& b) {
                              return a.box.rational_entries == b.box.rational_entries;
                          }),
              out.end());

    for (const auto& v : out) {
        const auto report = is_vertex(cs, v.box);
        if (!report.is_vertex)
            throw Error("vertex enumeration: a candidate failed the rank certificate");
    }
    return out;
}

} // namespace nscert
