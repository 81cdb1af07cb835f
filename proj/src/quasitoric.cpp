#include "qtbord/quasitoric.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtb::qt {

int ChernMonomial::norm() const
{
    int n = 0;
    for (size_t k = 0; k < exponents.size(); ++k)
        n += static_cast<int>(k + 1) * exponents[k];
    return n;
}

std::string ChernMonomial::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0)
            continue;
        if (!first)
            os << "*";
        os << "c" << (k + 1);
        if (exponents[k] > 1)
            os << "^" << exponents[k];
        first = false;
    }
    return first ? "1" : os.str();
}

std::vector<ChernMonomial> all_chern_monomials(int n)
{
    std::vector<ChernMonomial> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int k, int rem) -> void {
        if (k > n) {
            if (rem == 0)
                out.push_back(ChernMonomial{cur});
            return;
        }
        for (int c = 0; c * k <= rem; ++c) {
            cur[static_cast<size_t>(k - 1)] = c;
            self(self, k + 1, rem - c * k);
        }
        cur[static_cast<size_t>(k - 1)] = 0;
    };
    rec(rec, 1, n);
    return out;
}

std::vector<std::string> validate(const CharacteristicPair& m)
{
    std::vector<std::string> problems;
    const auto& p = m.poly;
    if (p.dim < 1)
        problems.push_back("polytope dimension must be positive");
    if (m.lambda.rows != p.dim || m.lambda.cols != p.num_facets)
        problems.push_back("characteristic matrix has wrong shape");
    if (m.vertex_signs.size() != p.vertices.size())
        problems.push_back("vertex sign list has wrong length");
    for (int s : m.vertex_signs)
        if (s != 1 && s != -1)
            problems.push_back("vertex sign not ±1");

    std::set<std::vector<int>> seen;
    std::vector<int> facet_use(static_cast<size_t>(p.num_facets), 0);
    for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
        const auto& v = p.vertices[vi];
        if (static_cast<int>(v.size()) != p.dim) {
            problems.push_back("vertex " + std::to_string(vi) + " does not have n facets");
            continue;
        }
        bool ok = true;
        std::set<int> distinct(v.begin(), v.end());
        if (static_cast<int>(distinct.size()) != p.dim) {
            problems.push_back("vertex " + std::to_string(vi) + " has repeated facets");
            ok = false;
        }
        for (int f : v)
            if (f < 0 || f >= p.num_facets) {
                problems.push_back("vertex " + std::to_string(vi) + " has facet out of range");
                ok = false;
            }
        if (!ok)
            continue;
        for (int f : v)
            facet_use[static_cast<size_t>(f)]++;
        if (!seen.insert(std::vector<int>(distinct.begin(), distinct.end())).second)
            problems.push_back("vertex " + std::to_string(vi) + " duplicates another vertex");
        if (m.lambda.rows == p.dim && m.lambda.cols == p.num_facets) {
            std::vector<int> cols(v.begin(), v.end());
            std::sort(cols.begin(), cols.end());
            mpz_class d = det(m.lambda.select_columns(cols));
            if (d != 1 && d != -1)
                problems.push_back("vertex " + std::to_string(vi) +
                                   ": submatrix determinant " + d.get_str() + " is not ±1");
        }
    }
    for (int f = 0; f < p.num_facets; ++f)
        if (facet_use[static_cast<size_t>(f)] == 0)
            problems.push_back("facet " + std::to_string(f) + " lies on no vertex");
    return problems;
}

std::optional<std::vector<mpz_class>> su_check(const CharacteristicPair& m)
{
    if (m.poly.vertices.empty())
        return std::nullopt;
    // The vertex submatrix is unimodular, so phi is pinned by any one vertex;
    // it remains to test the other columns.
    std::vector<int> cols(m.poly.vertices[0].begin(), m.poly.vertices[0].end());
    std::sort(cols.begin(), cols.end());
    IntMat inv = inverse_unimodular(m.lambda.select_columns(cols));
    int n = m.dim();
    std::vector<mpz_class> phi(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            phi[static_cast<size_t>(j)] += inv.at(i, j);
    for (int c = 0; c < m.num_facets(); ++c) {
        mpz_class dot = 0;
        for (int r = 0; r < n; ++r)
            dot += phi[static_cast<size_t>(r)] * m.lambda.at(r, c);
        if (dot != 1)
            return std::nullopt;
    }
    return phi;
}

CharacteristicPair conjugate_facet(const CharacteristicPair& m, int facet)
{
    if (facet < 0 || facet >= m.num_facets())
        throw std::out_of_range("conjugate_facet: facet index out of range");
    CharacteristicPair out = m;
    for (int r = 0; r < m.dim(); ++r)
        out.lambda.at(r, facet) = -out.lambda.at(r, facet);
    for (size_t vi = 0; vi < out.poly.vertices.size(); ++vi) {
        const auto& v = out.poly.vertices[vi];
        if (std::find(v.begin(), v.end(), facet) != v.end())
            out.vertex_signs[vi] = -out.vertex_signs[vi];
    }
    out.name = m.name + ".conj(" + std::to_string(facet) + ")";
    return out;
}

CharacteristicPair reverse_orientation(const CharacteristicPair& m)
{
    CharacteristicPair out = m;
    for (auto& s : out.vertex_signs)
        s = -s;
    out.name = "-" + m.name;
    return out;
}

CharacteristicPair left_multiply(const CharacteristicPair& m, const IntMat& g)
{
    mpz_class d = det(g);
    if (d != 1 && d != -1)
        throw std::invalid_argument("left_multiply: matrix is not in GL(n,Z)");
    CharacteristicPair out = m;
    out.lambda = g * m.lambda;
    return out;
}

RefineResult refine(const CharacteristicPair& m, int vertex)
{
    if (vertex < 0 || vertex >= static_cast<int>(m.poly.vertices.size()))
        throw std::out_of_range("refine: vertex index out of range");
    std::vector<int> vf(m.poly.vertices[static_cast<size_t>(vertex)]);
    std::sort(vf.begin(), vf.end());
    int n = m.dim(), mm = m.num_facets();

    IntMat inv = inverse_unimodular(m.lambda.select_columns(vf));
    IntMat newL = inv * m.lambda;

    // Facets of the chosen vertex first, then the rest in original order.
    std::vector<int> perm(static_cast<size_t>(mm), -1);
    for (size_t t = 0; t < vf.size(); ++t)
        perm[static_cast<size_t>(vf[t])] = static_cast<int>(t);
    int next = n;
    for (int f = 0; f < mm; ++f)
        if (perm[static_cast<size_t>(f)] < 0)
            perm[static_cast<size_t>(f)] = next++;

    CharacteristicPair out;
    out.poly.dim = n;
    out.poly.num_facets = mm;
    out.lambda = IntMat(n, mm);
    for (int c = 0; c < mm; ++c)
        for (int r = 0; r < n; ++r)
            out.lambda.at(r, perm[static_cast<size_t>(c)]) = newL.at(r, c);
    out.poly.vertices.reserve(m.poly.vertices.size());
    for (const auto& v : m.poly.vertices) {
        std::vector<int> nv;
        nv.reserve(v.size());
        for (int f : v)
            nv.push_back(perm[static_cast<size_t>(f)]);
        std::sort(nv.begin(), nv.end());
        out.poly.vertices.push_back(std::move(nv));
    }
    out.vertex_signs = m.vertex_signs;
    out.name = m.name + ".refined(" + std::to_string(vertex) + ")";
    return RefineResult{std::move(out), std::move(perm)};
}

CharacteristicPair sphere_product(int n)
{
    CharacteristicPair s;
    s.poly.dim = n;
    s.poly.num_facets = 2 * n;
    s.lambda = IntMat(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        s.lambda.at(i, i) = 1;
        s.lambda.at(i, n + i) = 1;
    }
    // Vertices indexed by subsets c of factors: facet i if c_i = 0, facet n+i
    // otherwise; the sign is the product of the per-factor signs (+1, -1).
    for (int c = 0; c < (1 << n); ++c) {
        std::vector<int> v;
        int parity = 0;
        for (int i = 0; i < n; ++i) {
            if (c & (1 << i)) {
                v.push_back(n + i);
                parity ^= 1;
            } else {
                v.push_back(i);
            }
        }
        std::sort(v.begin(), v.end());
        s.poly.vertices.push_back(std::move(v));
        s.vertex_signs.push_back(parity ? -1 : 1);
    }
    s.name = "S(" + std::to_string(n) + ")";
    return s;
}

namespace {

// Shared gluing step: append the vertices of `src` except `skip`, translating
// facet indices through `fmap`.
void append_vertices(CharacteristicPair& out, const CharacteristicPair& src, int skip,
                     const std::vector<int>& fmap)
{
    for (size_t vi = 0; vi < src.poly.vertices.size(); ++vi) {
        if (static_cast<int>(vi) == skip)
            continue;
        std::vector<int> nv;
        nv.reserve(src.poly.vertices[vi].size());
        for (int f : src.poly.vertices[vi])
            nv.push_back(fmap[static_cast<size_t>(f)]);
        std::sort(nv.begin(), nv.end());
        out.poly.vertices.push_back(std::move(nv));
        out.vertex_signs.push_back(src.vertex_signs[vi]);
    }
}

}  // namespace

CharacteristicPair connected_sum(const CharacteristicPair& a, int vertex_a,
                                 const CharacteristicPair& b, int vertex_b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("connected_sum: dimension mismatch");
    int n = a.dim();
    if (n < 2)
        throw std::invalid_argument("connected_sum: dimension must be >= 2");

    RefineResult ra = refine(a, vertex_a);
    RefineResult rb = refine(b, vertex_b);
    int sa = a.vertex_signs[static_cast<size_t>(vertex_a)];
    int sb = b.vertex_signs[static_cast<size_t>(vertex_b)];
    int ma = a.num_facets(), mb = b.num_facets();

    if (sa == -sb) {
        // Direct gluing: matrix (Λ* | I | Λ'*); facet i of the glued vertices
        // is merged pairwise in refined column order.
        CharacteristicPair out;
        out.poly.dim = n;
        out.poly.num_facets = ma + mb - n;
        out.lambda = IntMat(n, out.poly.num_facets);
        std::vector<int> amap(static_cast<size_t>(ma)), bmap(static_cast<size_t>(mb));
        for (int f = 0; f < ma; ++f)
            amap[static_cast<size_t>(f)] = f < n ? (ma - n) + f : f - n;
        for (int f = 0; f < mb; ++f)
            bmap[static_cast<size_t>(f)] = f < n ? (ma - n) + f : ma + (f - n);
        for (int f = 0; f < ma; ++f)
            for (int r = 0; r < n; ++r)
                out.lambda.at(r, amap[static_cast<size_t>(f)]) = ra.pair.lambda.at(r, f);
        for (int f = 0; f < mb; ++f)
            for (int r = 0; r < n; ++r)
                out.lambda.at(r, bmap[static_cast<size_t>(f)]) = rb.pair.lambda.at(r, f);
        append_vertices(out, ra.pair, vertex_a, amap);
        append_vertices(out, rb.pair, vertex_b, bmap);
        out.name = "(" + a.name + " # " + b.name + ")";
        return out;
    }

    // Equal signs: route through S = (S^2)^n, gluing at two cube vertices of
    // sign -sa.  Matrix (Λ* | I | I | Λ'*).
    CharacteristicPair s = sphere_product(n);
    int w = -1, w2 = -1;
    for (size_t vi = 0; vi < s.poly.vertices.size(); ++vi) {
        if (s.vertex_signs[vi] != -sa)
            continue;
        if (w < 0)
            w = static_cast<int>(vi);
        else if (w2 < 0) {
            w2 = static_cast<int>(vi);
            break;
        }
    }
    if (w < 0 || w2 < 0)
        throw std::logic_error("connected_sum: no cube vertices of the required sign");

    // Side chosen at factor i by cube vertex w: 0 -> facet i, 1 -> facet n+i.
    auto side = [&](int cube_vertex, int factor) {
        const auto& v = s.poly.vertices[static_cast<size_t>(cube_vertex)];
        return std::find(v.begin(), v.end(), factor) != v.end() ? 0 : 1;
    };

    CharacteristicPair out;
    out.poly.dim = n;
    out.poly.num_facets = ma + mb;
    out.lambda = IntMat(n, out.poly.num_facets);

    // Facet layout: [A's Λ* block] [merged block: F_i ~ w-side facet]
    // [other S side per factor, merged with F'_i when w'_i = opposite of w_i]
    // [B's Λ* block].
    std::vector<int> amap(static_cast<size_t>(ma)), bmap(static_cast<size_t>(mb));
    std::vector<int> smap(static_cast<size_t>(2 * n));
    for (int f = 0; f < ma; ++f)
        amap[static_cast<size_t>(f)] = f < n ? (ma - n) + f : f - n;
    for (int i = 0; i < n; ++i) {
        int wi = side(w, i);
        smap[static_cast<size_t>(i)] = wi == 0 ? (ma - n) + i : ma + i;
        smap[static_cast<size_t>(n + i)] = wi == 1 ? (ma - n) + i : ma + i;
    }
    for (int f = 0; f < mb; ++f) {
        if (f < n) {
            int w2f = side(w2, f) == 0 ? f : n + f;
            bmap[static_cast<size_t>(f)] = smap[static_cast<size_t>(w2f)];
        } else {
            bmap[static_cast<size_t>(f)] = ma + n + (f - n);
        }
    }
    for (int f = 0; f < ma; ++f)
        for (int r = 0; r < n; ++r)
            out.lambda.at(r, amap[static_cast<size_t>(f)]) = ra.pair.lambda.at(r, f);
    for (int i = 0; i < n; ++i) {
        out.lambda.at(i, (ma - n) + i) = 1;
        out.lambda.at(i, ma + i) = 1;
    }
    for (int f = n; f < mb; ++f)
        for (int r = 0; r < n; ++r)
            out.lambda.at(r, bmap[static_cast<size_t>(f)]) = rb.pair.lambda.at(r, f);

    append_vertices(out, ra.pair, vertex_a, amap);
    for (size_t vi = 0; vi < s.poly.vertices.size(); ++vi) {
        if (static_cast<int>(vi) == w || static_cast<int>(vi) == w2)
            continue;
        std::vector<int> nv;
        for (int f : s.poly.vertices[vi])
            nv.push_back(smap[static_cast<size_t>(f)]);
        std::sort(nv.begin(), nv.end());
        out.poly.vertices.push_back(std::move(nv));
        out.vertex_signs.push_back(s.vertex_signs[vi]);
    }
    append_vertices(out, rb.pair, vertex_b, bmap);
    out.name = "(" + a.name + " # S@[" + std::to_string(w) + "," + std::to_string(w2) +
               "] # " + b.name + ")";
    return out;
}

}  // namespace qtb::qt
