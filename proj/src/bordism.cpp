#include "qtbord/bordism.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtbord/numtheory.hpp"

namespace qtb::bord {

namespace {
inline mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }
}  // namespace

mpz_class s_of_class(const FormalBordismClass& c)
{
    mpz_class s = 0;
    for (const auto& t : c.terms) {
        if (t.member.n != c.n)
            throw std::invalid_argument("s_of_class: member dimension mismatch");
        s += z(t.coeff) * fam::s_number_cohomology(t.member);
    }
    return s;
}

bool milnor_generator_test(const FormalBordismClass& c, int i)
{
    if (c.n != i)
        throw std::invalid_argument("milnor_generator_test: dimension mismatch");
    mpz_class s = s_of_class(c);
    return abs(s) == z(nt::m_of(i));
}

namespace {

// Minimal-norm Bezout pair for a*x + b*y = g (a, b != 0).
std::pair<mpz_class, mpz_class> balanced_bezout(const mpz_class& a, const mpz_class& b,
                                                const mpz_class& g)
{
    mpz_class x, y, gg;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (gg != g)
        throw std::logic_error("balanced_bezout: gcd mismatch");
    mpz_class bs = b / g, as = a / g;
    // Scan the solution line x + t*bs, y - t*as near both one-dimensional minima.
    mpz_class best_x = x, best_y = y, best_norm = abs(x) + abs(y);
    auto consider = [&](const mpz_class& t) {
        mpz_class cx = x + t * bs, cy = y - t * as;
        mpz_class norm = abs(cx) + abs(cy);
        if (norm < best_norm) {
            best_norm = norm;
            best_x = cx;
            best_y = cy;
        }
    };
    if (bs != 0 && as != 0) {
        mpz_class t1, t2;
        mpz_tdiv_q(t1.get_mpz_t(), mpz_class(-x).get_mpz_t(), bs.get_mpz_t());
        mpz_tdiv_q(t2.get_mpz_t(), y.get_mpz_t(), as.get_mpz_t());
        for (mpz_class d = -2; d <= 2; ++d) {
            consider(t1 + d);
            consider(t2 + d);
        }
    }
    return {best_x, best_y};
}

struct SearchMember {
    fam::FamilyPresentation member;
    mpz_class s;
};

// Smallest subset (ties by enumeration order, then by coefficient l1-norm)
// whose s-numbers combine to the target.
FormalBordismClass combine_to_target(const std::vector<SearchMember>& members,
                                     const mpz_class& target, int n)
{
    mpz_class all_gcd = 0;
    for (const auto& m : members)
        mpz_gcd(all_gcd.get_mpz_t(), all_gcd.get_mpz_t(), m.s.get_mpz_t());
    if (all_gcd == 0 || target % all_gcd != 0)
        throw std::runtime_error("combine_to_target: family gcd does not divide the target");

    auto build = [&](const std::vector<size_t>& idx, const std::vector<mpz_class>& coeff) {
        FormalBordismClass c;
        c.n = n;
        for (size_t t = 0; t < idx.size(); ++t) {
            if (coeff[t] == 0)
                continue;
            if (!coeff[t].fits_slong_p())
                throw std::runtime_error("combine_to_target: coefficient out of range");
            c.terms.push_back({coeff[t].get_si(), members[idx[t]].member});
        }
        return c;
    };

    // Size 1.
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i].s == 0)
            continue;
        if (target % members[i].s == 0)
            return build({i}, {target / members[i].s});
    }

    // Size 2, minimizing |x| + |y| among achieving pairs.
    {
        bool found = false;
        std::vector<size_t> best_idx;
        std::vector<mpz_class> best_coeff;
        mpz_class best_norm = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (members[i].s == 0 || members[j].s == 0)
                    continue;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), members[i].s.get_mpz_t(), members[j].s.get_mpz_t());
                if (g == 0 || target % g != 0)
                    continue;
                auto [x, y] = balanced_bezout(members[i].s, members[j].s, g);
                mpz_class scale = target / g;
                x *= scale;
                y *= scale;
                mpz_class norm = abs(x) + abs(y);
                if (!found || norm < best_norm) {
                    found = true;
                    best_norm = norm;
                    best_idx = {i, j};
                    best_coeff = {x, y};
                }
            }
        }
        if (found)
            return build(best_idx, best_coeff);
    }

    // Fall back to a sequential extended gcd over the whole family.
    std::vector<mpz_class> coeff(members.size(), 0);
    mpz_class g = 0;
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i].s == 0)
            continue;
        if (g == 0) {
            g = abs(members[i].s);
            coeff[i] = members[i].s > 0 ? 1 : -1;
            continue;
        }
        mpz_class ng, x, y;
        mpz_gcdext(ng.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t(),
                   members[i].s.get_mpz_t());
        for (auto& cc : coeff)
            cc *= x;
        coeff[i] = y;
        g = ng;
        if (target % g == 0)
            break;
    }
    if (g == 0 || target % g != 0)
        throw std::runtime_error("combine_to_target: no combination reaches the target");
    mpz_class scale = target / g;
    std::vector<size_t> idx;
    std::vector<mpz_class> cs;
    for (size_t i = 0; i < members.size(); ++i) {
        idx.push_back(i);
        cs.push_back(coeff[i] * scale);
    }
    return build(idx, cs);
}

GeneratorCertificate finish_certificate(FormalBordismClass cls, const mpz_class& target,
                                        bool su, std::string kind)
{
    GeneratorCertificate cert;
    cert.s_value = s_of_class(cls);
    if (cert.s_value != target)
        throw std::logic_error("certificate: engine s-number disagrees with the target");
    cert.cls = std::move(cls);
    cert.target = target;
    cert.su = su;
    cert.kind = std::move(kind);
    return cert;
}

}  // namespace

GeneratorCertificate find_y_odd(int k)
{
    if (k <= 1)
        throw std::invalid_argument("find_y_odd: k must be > 1");
    int dim = 2 * k + 1;
    mpz_class target = z(nt::m_of(2 * k + 1)) * z(nt::m_of(2 * k));
    std::vector<SearchMember> members;
    for (int n1 = 2; n1 < dim; n1 += 2) {
        fam::FamilyPresentation m = fam::tilde_L(n1, dim - n1);
        if (!qt::su_check(m.pair))
            throw std::logic_error("find_y_odd: member is not SU");
        mpz_class s = fam::s_number_cohomology(m);
        members.push_back({std::move(m), std::move(s)});
    }
    FormalBordismClass cls = combine_to_target(members, target, dim);
    return finish_certificate(std::move(cls), target, true, "y_odd");
}

GeneratorCertificate find_y_even(int k)
{
    if (k <= 2)
        throw std::invalid_argument("find_y_even: k must be > 2");
    int dim = 2 * k;
    mpz_class target = 2 * z(nt::m_of(2 * k)) * z(nt::m_of(2 * k - 1));
    std::vector<SearchMember> members;
    for (int n1 = 2; n1 + 2 <= dim; n1 += 2) {
        int n2 = dim - 1 - n1;
        fam::FamilyPresentation m = fam::tilde_N(n1, n2);
        if (!qt::su_check(m.pair))
            throw std::logic_error("find_y_even: member is not SU");
        mpz_class s = fam::s_number_cohomology(m);
        members.push_back({std::move(m), std::move(s)});
    }
    FormalBordismClass cls = combine_to_target(members, target, dim);
    return finish_certificate(std::move(cls), target, true, "y_even");
}

GeneratorCertificate find_unitary(int i)
{
    if (i < 1)
        throw std::invalid_argument("find_unitary: dimension must be positive");
    mpz_class target = z(nt::m_of(i));
    std::vector<SearchMember> members;
    for (int n1 = 0; n1 < i; ++n1) {
        fam::FamilyPresentation m = fam::L(n1, i - n1);
        mpz_class s = fam::s_number_cohomology(m);
        members.push_back({std::move(m), std::move(s)});
    }
    FormalBordismClass cls = combine_to_target(members, target, i);
    return finish_certificate(std::move(cls), target, false, "unitary");
}

qt::CharacteristicPair realize_certificate(const GeneratorCertificate& c)
{
    long long summands = 0;
    for (const auto& t : c.cls.terms)
        summands += std::abs(t.coeff);
    if (summands == 0)
        throw std::invalid_argument("realize_certificate: empty class");
    if (summands > 1 && 2 * c.cls.n <= 4)
        throw std::invalid_argument("realize_certificate: dimension too small for connected sums");

    std::vector<qt::CharacteristicPair> pieces;
    for (const auto& t : c.cls.terms) {
        qt::CharacteristicPair p = t.member.pair;
        if (t.coeff < 0)
            p = reverse_orientation(p);
        for (long long r = 0; r < std::abs(t.coeff); ++r)
            pieces.push_back(p);
    }
    qt::CharacteristicPair acc = pieces[0];
    for (size_t i = 1; i < pieces.size(); ++i)
        acc = connected_sum(acc, 0, pieces[i], 0);
    return acc;
}

nlohmann::ordered_json certificate_json(const GeneratorCertificate& c)
{
    nlohmann::ordered_json j;
    j["kind"] = c.kind;
    j["complex_dim"] = c.cls.n;
    j["real_dim"] = 2 * c.cls.n;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : c.cls.terms) {
        nlohmann::ordered_json jt;
        jt["coefficient"] = t.coeff;
        jt["member"] = t.member.name;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    if (!c.s_value.fits_slong_p() || !c.target.fits_slong_p())
        throw std::runtime_error("certificate_json: value out of range");
    j["s_value"] = c.s_value.get_si();
    j["target"] = c.target.get_si();
    j["su"] = c.su;
    return j;
}

}  // namespace qtb::bord
