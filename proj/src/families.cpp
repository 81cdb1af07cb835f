#include "qtbord/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtbord/numtheory.hpp"

namespace qtb::fam {

using poly::Exponents;
using poly::QuotientPresentation;
using poly::SparsePoly;
using qt::CharacteristicPair;
using qt::PolytopeCombinatorics;

namespace {

// Vertices of a product of simplices: one dropped facet per factor,
// enumerated with the first factor outermost.
PolytopeCombinatorics simplex_product(const std::vector<int>& dims)
{
    PolytopeCombinatorics p;
    std::vector<int> offsets;
    for (int d : dims) {
        offsets.push_back(p.num_facets);
        p.dim += d;
        p.num_facets += d + 1;
    }
    std::vector<int> drop(dims.size(), 0);
    while (true) {
        std::vector<int> v;
        for (size_t f = 0; f < dims.size(); ++f)
            for (int j = 0; j <= dims[f]; ++j)
                if (j != drop[f])
                    v.push_back(offsets[f] + j);
        p.vertices.push_back(std::move(v));
        size_t f = dims.size();
        while (f-- > 0) {
            if (++drop[f] <= dims[f])
                break;
            drop[f] = 0;
            if (f == 0)
                return p;
        }
    }
}

SparsePoly lin(int arity, std::initializer_list<std::pair<int, int>> coeffs)
{
    SparsePoly s(arity);
    for (auto [var, c] : coeffs) {
        Exponents e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(var)] = 1;
        s.add_term(e, c);
    }
    return s;
}

// Pad a polynomial into a wider variable list starting at `offset`.
SparsePoly lift(const SparsePoly& s, int new_arity, int offset)
{
    SparsePoly out(new_arity);
    for (const auto& [e, c] : s.terms()) {
        Exponents ne(static_cast<size_t>(new_arity), 0);
        for (size_t i = 0; i < e.size(); ++i)
            ne[static_cast<size_t>(offset) + i] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

void check_parity(int n1, int n2, const char* who)
{
    if (n1 < 2 || n1 % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": n1 must be positive even");
    if (n2 < 1 || n2 % 2 != 1)
        throw std::invalid_argument(std::string(who) + ": n2 must be positive odd");
}

// Negate every row whose identity-block diagonal entry became -1, so the
// matrix returns to refined shape after facet conjugations.  A lattice
// change of basis only: vertex signs stay put.
CharacteristicPair renormalize_rows(const CharacteristicPair& m,
                                    const std::vector<int>& identity_col_of_row)
{
    IntMat g = IntMat::identity(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        if (m.lambda.at(r, identity_col_of_row[static_cast<size_t>(r)]) < 0)
            g.at(r, r) = -1;
    return left_multiply(m, g);
}

}  // namespace

FamilyPresentation cpn(int n)
{
    if (n < 1)
        throw std::invalid_argument("cpn: n must be >= 1");
    FamilyPresentation f;
    f.name = "cpn(" + std::to_string(n) + ")";
    f.n = n;

    f.pair.poly = simplex_product({n});
    f.pair.lambda = IntMat(n, n + 1);
    for (int i = 0; i < n; ++i) {
        f.pair.lambda.at(i, i) = 1;
        f.pair.lambda.at(i, n) = -1;
    }
    f.pair.vertex_signs.assign(f.pair.poly.vertices.size(), 1);
    f.pair.name = f.name;

    f.presentation.arity = 1;
    f.presentation.annihilators = {{0, n + 1}};
    f.presentation.fundamental_monomial = {n};
    f.presentation.var_names = {"v"};
    f.presentation.validate();
    for (int i = 0; i <= n; ++i)
        f.linear_forms.push_back(lin(1, {{0, 1}}));
    return f;
}

FamilyPresentation proj_sum(int n1, const std::vector<long long>& degrees)
{
    if (n1 < 1 || degrees.empty())
        throw std::invalid_argument("proj_sum: need n1 >= 1 and at least one degree");
    int n2 = static_cast<int>(degrees.size());
    int n = n1 + n2;
    FamilyPresentation f;
    {
        std::string d;
        for (long long x : degrees)
            d += (d.empty() ? "" : ",") + std::to_string(x);
        f.name = "proj(" + std::to_string(n1) + ";" + d + ")";
    }
    f.n = n;

    f.pair.poly = simplex_product({n1, n2});
    f.pair.lambda = IntMat(n, n1 + n2 + 2);
    for (int i = 0; i < n1; ++i) {
        f.pair.lambda.at(i, i) = 1;
        f.pair.lambda.at(i, n1) = -1;
    }
    for (int r = 0; r < n2; ++r) {
        f.pair.lambda.at(n1 + r, n1) = static_cast<long>(degrees[static_cast<size_t>(r)]);
        f.pair.lambda.at(n1 + r, n1 + 1 + r) = 1;
        f.pair.lambda.at(n1 + r, n1 + 1 + n2) = -1;
    }
    f.pair.vertex_signs.assign(f.pair.poly.vertices.size(), 1);
    f.pair.name = f.name;

    // Z[u,v] / (u^{n1+1}, v(v - i_1 u)...(v - i_{n2} u)); the fiber relation in
    // solved form replaces v^{n2+1} by lower powers of v.
    f.presentation.arity = 2;
    f.presentation.annihilators = {{0, n1 + 1}};
    SparsePoly rel = lin(2, {{1, 1}});  // v
    for (long long d : degrees)
        rel = rel * (lin(2, {{1, 1}}) - mpz_class(static_cast<long>(d)) * lin(2, {{0, 1}}));
    SparsePoly replacement(2);
    for (const auto& [e, c] : rel.terms()) {
        if (e == Exponents{0, n2 + 1})
            continue;  // the leading term
        replacement.add_term(e, -c);
    }
    if (replacement.is_zero())
        f.presentation.annihilators.push_back({1, n2 + 1});
    else
        f.presentation.solved = {{1, n2 + 1, replacement}};
    f.presentation.fundamental_monomial = {n1, n2};
    f.presentation.var_names = {"u", "v"};
    f.presentation.validate();

    for (int i = 0; i <= n1; ++i)
        f.linear_forms.push_back(lin(2, {{0, 1}}));
    for (int r = 0; r < n2; ++r)
        f.linear_forms.push_back(lin(2, {{1, 1}}) -
                                 mpz_class(static_cast<long>(degrees[static_cast<size_t>(r)])) * lin(2, {{0, 1}}));
    f.linear_forms.push_back(lin(2, {{1, 1}}));
    return f;
}

FamilyPresentation L(int n1, int n2)
{
    if (n1 < 0 || n2 < 0 || (n1 == 0 && n2 == 0))
        throw std::invalid_argument("L: parameters must be nonnegative, not both zero");
    if (n1 == 0)
        return cpn(n2);
    if (n2 == 0)
        return cpn(n1);
    std::vector<long long> degrees(static_cast<size_t>(n2), 0);
    degrees[0] = 1;
    FamilyPresentation f = proj_sum(n1, degrees);
    f.name = "L(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
    f.pair.name = f.name;
    return f;
}

FamilyPresentation tilde_L(int n1, int n2)
{
    check_parity(n1, n2, "tilde_L");
    FamilyPresentation base = L(n1, n2);
    std::string name = "tildeL(" + std::to_string(n1) + "," + std::to_string(n2) + ")";

    // Conjugated facets: u_1, u_3, ..., u_{n1-1}; w_2, w_4, ..., w_{n2-1};
    // and the last fiber facet.
    CharacteristicPair pair = base.pair;
    for (int j = 0; j < n1; j += 2)
        pair = conjugate_facet(pair, j);
    for (int r = 2; r < n2; r += 2)
        pair = conjugate_facet(pair, n1 + 1 + r - 1);
    pair = conjugate_facet(pair, n1 + 1 + n2);

    std::vector<int> idcol(static_cast<size_t>(n1 + n2));
    for (int r = 0; r < n1; ++r)
        idcol[static_cast<size_t>(r)] = r;
    for (int r = n1; r < n1 + n2; ++r)
        idcol[static_cast<size_t>(r)] = r + 1;
    pair = renormalize_rows(pair, idcol);
    pair.name = name;

    FamilyPresentation f;
    f.name = name;
    f.n = n1 + n2;
    f.presentation = base.presentation;
    f.pair = std::move(pair);

    for (int j = 0; j < n1; ++j)
        f.linear_forms.push_back(lin(2, {{0, j % 2 == 0 ? -1 : 1}}));
    f.linear_forms.push_back(lin(2, {{0, 1}}));
    f.linear_forms.push_back(lin(2, {{0, -1}, {1, 1}}));  // v - u
    for (int r = 1; r < n2; ++r)
        f.linear_forms.push_back(lin(2, {{1, r % 2 == 1 ? -1 : 1}}));
    f.linear_forms.push_back(lin(2, {{1, -1}}));
    if (static_cast<int>(f.linear_forms.size()) != n1 + n2 + 2)
        throw std::logic_error("tilde_L: form count mismatch");
    return f;
}

FamilyPresentation tilde_N(int n1, int n2)
{
    check_parity(n1, n2, "tilde_N");
    int n = 1 + n1 + n2;
    int m = n1 + n2 + 4;
    std::string name = "tildeN(" + std::to_string(n1) + "," + std::to_string(n2) + ")";

    // Toric progenitor over Δ^1 x Δ^{n1} x Δ^{n2}: a projectivisation of a sum
    // of line bundles over CP^1 x CP^{n1}.  Facet order: G_0, G_1,
    // E_1..E_{n1+1}, D_1..D_{n2+1}.
    CharacteristicPair toric;
    toric.poly = simplex_product({1, n1, n2});
    toric.lambda = IntMat(n, m);
    toric.lambda.at(0, 0) = 1;
    toric.lambda.at(0, 1) = -1;
    for (int j = 0; j < n1; ++j) {
        toric.lambda.at(1 + j, 2 + j) = 1;
        toric.lambda.at(1 + j, 2 + n1) = -1;
    }
    for (int r = 0; r < n2; ++r) {
        toric.lambda.at(1 + n1 + r, n1 + 3 + r) = 1;
        toric.lambda.at(1 + n1 + r, n1 + 3 + n2) = -1;
    }
    if (n2 >= 3) {
        // Fiber twists: two lines over CP^1, one over CP^{n1}.
        toric.lambda.at(1 + n1 + 0, 1) = -1;
        toric.lambda.at(1 + n1 + 1, 1) = -1;
        toric.lambda.at(1 + n1 + 2, 2 + n1) = -1;
    } else {
        // n2 = 1 leaves room for a single twist; the SU condition forces it
        // onto the CP^{n1} class and the pair splits off an S^2 factor.
        toric.lambda.at(1 + n1 + 0, 2 + n1) = -1;
    }
    toric.vertex_signs.assign(toric.poly.vertices.size(), 1);
    toric.name = name + ".toric";

    CharacteristicPair pair = toric;
    pair = conjugate_facet(pair, 1);
    for (int j = 1; j <= n1; j += 2)
        pair = conjugate_facet(pair, 1 + j);
    for (int r = 1; r <= n2; r += 2)
        pair = conjugate_facet(pair, n1 + 2 + r);

    std::vector<int> idcol(static_cast<size_t>(n));
    idcol[0] = 0;
    for (int j = 0; j < n1; ++j)
        idcol[static_cast<size_t>(1 + j)] = 2 + j;
    for (int r = 0; r < n2; ++r)
        idcol[static_cast<size_t>(1 + n1 + r)] = n1 + 3 + r;
    pair = renormalize_rows(pair, idcol);

    // Global orientation: fixed so the engines reproduce the family's
    // positive s-number normalization (validated by the engine-agreement
    // and closed-form suites).
    pair = reverse_orientation(pair);
    pair.name = name;

    FamilyPresentation f;
    f.name = name;
    f.n = n;
    f.pair = std::move(pair);

    f.presentation.arity = 3;
    f.presentation.annihilators = {{0, 2}, {1, n1 + 1}};
    if (n2 >= 3) {
        // w^{n2+1} = 2 u w^{n2} - v w^{n2} + 2 u v w^{n2-1}
        SparsePoly repl(3);
        repl.add_term({1, 0, n2}, 2);
        repl.add_term({0, 1, n2}, -1);
        repl.add_term({1, 1, n2 - 1}, 2);
        f.presentation.solved = {{2, n2 + 1, repl}};
    } else {
        SparsePoly repl(3);
        repl.add_term({0, 1, 1}, -1);  // w^2 = -v w
        f.presentation.solved = {{2, 2, repl}};
    }
    f.presentation.fundamental_monomial = {1, n1, n2};
    f.presentation.var_names = {"u", "v", "w"};
    f.presentation.validate();

    f.linear_forms.push_back(lin(3, {{0, -1}}));
    f.linear_forms.push_back(lin(3, {{0, 1}}));
    for (int j = 0; j < n1; ++j)
        f.linear_forms.push_back(lin(3, {{1, j % 2 == 0 ? -1 : 1}}));
    f.linear_forms.push_back(lin(3, {{1, 1}}));
    if (n2 >= 3) {
        f.linear_forms.push_back(lin(3, {{0, 1}, {2, -1}}));   // u - w
        f.linear_forms.push_back(lin(3, {{0, -1}, {2, 1}}));   // w - u
        f.linear_forms.push_back(lin(3, {{1, -1}, {2, -1}}));  // -v - w
        for (int r = 3; r < n2; ++r)
            f.linear_forms.push_back(lin(3, {{2, r % 2 == 1 ? 1 : -1}}));
        f.linear_forms.push_back(lin(3, {{2, 1}}));
    } else {
        f.linear_forms.push_back(lin(3, {{1, -1}, {2, -1}}));
        f.linear_forms.push_back(lin(3, {{2, 1}}));
    }
    if (static_cast<int>(f.linear_forms.size()) != m)
        throw std::logic_error("tilde_N: form count mismatch");
    return f;
}

FamilyPresentation product(const FamilyPresentation& a, const FamilyPresentation& b)
{
    FamilyPresentation f;
    f.name = "(" + a.name + " x " + b.name + ")";
    f.n = a.n + b.n;

    int na = a.pair.dim(), nb = b.pair.dim();
    int ma = a.pair.num_facets(), mb = b.pair.num_facets();
    f.pair.poly.dim = na + nb;
    f.pair.poly.num_facets = ma + mb;
    f.pair.lambda = IntMat(na + nb, ma + mb);
    for (int r = 0; r < na; ++r)
        for (int c = 0; c < ma; ++c)
            f.pair.lambda.at(r, c) = a.pair.lambda.at(r, c);
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < mb; ++c)
            f.pair.lambda.at(na + r, ma + c) = b.pair.lambda.at(r, c);
    for (size_t va = 0; va < a.pair.poly.vertices.size(); ++va) {
        for (size_t vb = 0; vb < b.pair.poly.vertices.size(); ++vb) {
            std::vector<int> v = a.pair.poly.vertices[va];
            for (int fb : b.pair.poly.vertices[vb])
                v.push_back(ma + fb);
            f.pair.poly.vertices.push_back(std::move(v));
            f.pair.vertex_signs.push_back(a.pair.vertex_signs[va] * b.pair.vertex_signs[vb]);
        }
    }
    f.pair.name = f.name;

    int aa = a.presentation.arity, ab = b.presentation.arity;
    f.presentation.arity = aa + ab;
    for (const auto& an : a.presentation.annihilators)
        f.presentation.annihilators.push_back(an);
    for (const auto& an : b.presentation.annihilators)
        f.presentation.annihilators.push_back({an.var + aa, an.power});
    for (const auto& s : a.presentation.solved)
        f.presentation.solved.push_back({s.var, s.power, lift(s.replacement, aa + ab, 0)});
    for (const auto& s : b.presentation.solved)
        f.presentation.solved.push_back({s.var + aa, s.power, lift(s.replacement, aa + ab, aa)});
    f.presentation.fundamental_monomial = a.presentation.fundamental_monomial;
    for (int e : b.presentation.fundamental_monomial)
        f.presentation.fundamental_monomial.push_back(e);
    f.presentation.fundamental_value =
        a.presentation.fundamental_value * b.presentation.fundamental_value;
    f.presentation.var_names = a.presentation.var_names;
    for (const auto& vn : b.presentation.var_names)
        f.presentation.var_names.push_back(vn + "'");
    f.presentation.validate();

    for (const auto& form : a.linear_forms)
        f.linear_forms.push_back(lift(form, aa + ab, 0));
    for (const auto& form : b.linear_forms)
        f.linear_forms.push_back(lift(form, aa + ab, aa));
    return f;
}

mpz_class closed_form_s(const std::string& tag, int n1, int n2)
{
    auto alt_sum = [](int n, int from, int to) {
        mpz_class s = 0;
        for (int j = from; j <= to; ++j) {
            mpz_class c = nt::binomial(n, j);
            s += (j % 2 == 0) ? c : -c;
        }
        return s;
    };
    if (tag == "lemma1") {
        if (n2 <= 0)
            throw std::invalid_argument("closed_form_s(lemma1): n2 must be positive");
        return alt_sum(n1 + n2, 0, n1) + n2;
    }
    if (tag == "snL")
        return alt_sum(n1 + n2, 1, n1);
    if (tag == "snN")
        return 2 * (alt_sum(n1 + n2 + 1, 1, n1) - n1);
    if (tag == "snmilnor")
        return -nt::binomial(n1 + n2, n1);
    throw std::invalid_argument("closed_form_s: unknown tag " + tag);
}

poly::SparsePoly first_chern_class(const FamilyPresentation& f)
{
    SparsePoly c1(f.presentation.arity);
    for (const auto& form : f.linear_forms)
        c1 = c1 + form;
    return normal_form(c1, f.presentation);
}

poly::SparsePoly total_chern_class(const FamilyPresentation& f)
{
    SparsePoly acc = SparsePoly::constant(f.presentation.arity, 1);
    for (const auto& form : f.linear_forms)
        acc = normal_form(acc * (SparsePoly::constant(f.presentation.arity, 1) + form),
                          f.presentation);
    return acc;
}

mpz_class chern_number_cohomology(const FamilyPresentation& f, const qt::ChernMonomial& omega)
{
    if (omega.norm() != f.n)
        throw std::invalid_argument("chern_number_cohomology: |omega| does not match dimension");
    SparsePoly total = total_chern_class(f);
    SparsePoly prod = SparsePoly::constant(f.presentation.arity, 1);
    for (size_t k = 0; k < omega.exponents.size(); ++k) {
        if (omega.exponents[k] == 0)
            continue;
        SparsePoly ck = total.homogeneous_part(static_cast<int>(k) + 1);
        for (int t = 0; t < omega.exponents[k]; ++t)
            prod = normal_form(prod * ck, f.presentation);
    }
    return evaluate_fundamental(prod, f.presentation);
}

mpz_class s_number_cohomology(const FamilyPresentation& f)
{
    SparsePoly s(f.presentation.arity);
    for (const auto& form : f.linear_forms)
        s = s + normal_form(form.pow(f.n), f.presentation);
    return evaluate_fundamental(normal_form(s, f.presentation), f.presentation);
}

namespace {

std::vector<std::string> split_top_level(const std::string& s)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

FamilyPresentation parse_family_spec(const std::string& spec)
{
    std::string s = strip(spec);
    size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw std::invalid_argument("parse_family_spec: expected tag(args): " + spec);
    std::string tag = strip(s.substr(0, open));
    std::string args = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::string> parts = split_top_level(args);

    auto as_int = [&](const std::string& t) {
        size_t pos = 0;
        std::string u = strip(t);
        long long v = std::stoll(u, &pos);
        if (pos != u.size())
            throw std::invalid_argument("parse_family_spec: bad integer '" + t + "'");
        return v;
    };

    if (tag == "cpn") {
        if (parts.size() != 1)
            throw std::invalid_argument("parse_family_spec: cpn takes one argument");
        return cpn(static_cast<int>(as_int(parts[0])));
    }
    if (tag == "L" || tag == "tildeL" || tag == "tildeN") {
        if (parts.size() != 2)
            throw std::invalid_argument("parse_family_spec: " + tag + " takes (n1,n2)");
        int n1 = static_cast<int>(as_int(parts[0]));
        int n2 = static_cast<int>(as_int(parts[1]));
        if (tag == "L")
            return L(n1, n2);
        if (tag == "tildeL")
            return tilde_L(n1, n2);
        return tilde_N(n1, n2);
    }
    if (tag == "proj") {
        if (parts.size() < 2)
            throw std::invalid_argument("parse_family_spec: proj takes (n1,d1,...)");
        int n1 = static_cast<int>(as_int(parts[0]));
        std::vector<long long> degrees;
        for (size_t i = 1; i < parts.size(); ++i)
            degrees.push_back(as_int(parts[i]));
        return proj_sum(n1, degrees);
    }
    if (tag == "product") {
        if (parts.size() != 2)
            throw std::invalid_argument("parse_family_spec: product takes two specs");
        return product(parse_family_spec(parts[0]), parse_family_spec(parts[1]));
    }
    throw std::invalid_argument("parse_family_spec: unknown family tag '" + tag + "'");
}

}  // namespace qtb::fam
