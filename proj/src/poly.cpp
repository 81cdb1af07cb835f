#include "qtbord/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtb::poly {

SparsePoly SparsePoly::constant(int arity, const mpz_class& c)
{
    SparsePoly p(arity);
    p.add_term(Exponents(static_cast<size_t>(arity), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int arity, int var, int power)
{
    if (var < 0 || var >= arity)
        throw std::invalid_argument("SparsePoly::variable: index out of range");
    SparsePoly p(arity);
    Exponents e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(var)] = power;
    p.add_term(e, 1);
    return p;
}

SparsePoly SparsePoly::monomial(Exponents e, const mpz_class& c)
{
    SparsePoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void SparsePoly::add_term(const Exponents& e, const mpz_class& c)
{
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("SparsePoly: exponent arity mismatch");
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int SparsePoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool SparsePoly::is_homogeneous(int deg) const
{
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != deg)
            return false;
    return true;
}

SparsePoly SparsePoly::homogeneous_part(int deg) const
{
    SparsePoly out(arity_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == deg)
            out.add_term(e, c);
    return out;
}

mpz_class SparsePoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly out(arity_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

void SparsePoly::check_arity(const SparsePoly& a, const SparsePoly& b)
{
    if (a.arity_ != b.arity_)
        throw std::invalid_argument("SparsePoly: arity mismatch");
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly::check_arity(a, b);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, c);
    return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly::check_arity(a, b);
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, -c);
    return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly::check_arity(a, b);
    SparsePoly out(a.arity_);
    Exponents e(static_cast<size_t>(a.arity_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly operator*(const mpz_class& c, const SparsePoly& a)
{
    SparsePoly out(a.arity_);
    if (c == 0)
        return out;
    for (const auto& [e, t] : a.terms_)
        out.terms_.emplace(e, c * t);
    return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b)
{
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(int k) const
{
    if (k < 0)
        throw std::invalid_argument("SparsePoly::pow: negative exponent");
    SparsePoly acc = SparsePoly::constant(arity_, 1);
    for (int i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

std::string SparsePoly::str(const std::vector<std::string>& var_names) const
{
    if (terms_.empty())
        return "0";
    auto name = [&](size_t i) {
        if (i < var_names.size())
            return var_names[i];
        return "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool has_vars = false;
        std::ostringstream vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (has_vars)
                vars << "*";
            vars << name(i);
            if (e[i] > 1)
                vars << "^" << e[i];
            has_vars = true;
        }
        if (!has_vars) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

int QuotientPresentation::top_degree() const
{
    return std::accumulate(fundamental_monomial.begin(), fundamental_monomial.end(), 0);
}

void QuotientPresentation::validate() const
{
    std::vector<int> seen(static_cast<size_t>(arity), 0);
    auto mark = [&](int var) {
        if (var < 0 || var >= arity)
            throw std::invalid_argument("QuotientPresentation: variable out of range");
        if (seen[static_cast<size_t>(var)]++)
            throw std::invalid_argument("QuotientPresentation: variable has two rules");
    };
    for (const auto& a : annihilators) {
        mark(a.var);
        if (a.power < 1)
            throw std::invalid_argument("QuotientPresentation: annihilator power < 1");
    }
    for (const auto& s : solved) {
        mark(s.var);
        if (s.power < 1)
            throw std::invalid_argument("QuotientPresentation: relation power < 1");
        if (s.replacement.arity() != arity)
            throw std::invalid_argument("QuotientPresentation: replacement arity mismatch");
        // Strictly smaller degree in the solved variable guarantees termination.
        for (const auto& [e, c] : s.replacement.terms())
            if (e[static_cast<size_t>(s.var)] >= s.power)
                throw std::invalid_argument(
                    "QuotientPresentation: replacement does not lower the solved variable");
    }
    if (static_cast<int>(fundamental_monomial.size()) != arity)
        throw std::invalid_argument("QuotientPresentation: fundamental monomial arity mismatch");
    if (fundamental_value != 1 && fundamental_value != -1)
        throw std::invalid_argument("QuotientPresentation: fundamental value must be ±1");
}

SparsePoly normal_form(const SparsePoly& p, const QuotientPresentation& q)
{
    if (p.arity() != q.arity)
        throw std::invalid_argument("normal_form: arity mismatch");

    std::map<Exponents, mpz_class> work(p.terms().begin(), p.terms().end());
    SparsePoly out(q.arity);
    // Generous guard against a malformed presentation that fails to terminate.
    long long steps = 0;
    const long long max_steps = 50'000'000;

    while (!work.empty()) {
        if (++steps > max_steps)
            throw std::runtime_error("normal_form: reduction did not terminate");
        auto it = work.begin();
        Exponents e = it->first;
        mpz_class c = it->second;
        work.erase(it);
        if (c == 0)
            continue;

        bool killed = false;
        for (const auto& a : q.annihilators) {
            if (e[static_cast<size_t>(a.var)] >= a.power) {
                killed = true;
                break;
            }
        }
        if (killed)
            continue;

        const QuotientPresentation::SolvedRelation* rule = nullptr;
        for (const auto& s : q.solved) {
            if (e[static_cast<size_t>(s.var)] >= s.power) {
                rule = &s;
                break;
            }
        }
        if (rule == nullptr) {
            out.add_term(e, c);
            continue;
        }

        // Substitute x^d -> replacement once; the solved exponent strictly drops.
        Exponents base = e;
        base[static_cast<size_t>(rule->var)] -= rule->power;
        for (const auto& [re, rc] : rule->replacement.terms()) {
            Exponents ne(base.size());
            for (size_t i = 0; i < ne.size(); ++i)
                ne[i] = base[i] + re[i];
            auto wit = work.find(ne);
            if (wit == work.end()) {
                work.emplace(std::move(ne), c * rc);
            } else {
                wit->second += c * rc;
                if (wit->second == 0)
                    work.erase(wit);
            }
        }
    }
    return out;
}

mpz_class evaluate_fundamental(const SparsePoly& p, const QuotientPresentation& q)
{
    if (p.arity() != q.arity)
        throw std::invalid_argument("evaluate_fundamental: arity mismatch");
    int top = q.top_degree();
    if (!p.is_zero() && !p.is_homogeneous(top))
        throw std::invalid_argument("evaluate_fundamental: class is not homogeneous of top degree");

    SparsePoly nf = normal_form(p, q);
    mpz_class value = 0;
    for (const auto& [e, c] : nf.terms()) {
        if (e == q.fundamental_monomial)
            value = c;
        else
            throw std::runtime_error(
                "evaluate_fundamental: residual top-degree monomial; presentation incomplete");
    }
    return value * q.fundamental_value;
}

}  // namespace qtb::poly
