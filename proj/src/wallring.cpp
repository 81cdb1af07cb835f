#include "qtbord/wallring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtb::wall {

int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (auto [g, e] : m)
        d += g * e;
    return d;
}

WallElement WallElement::constant(const mpz_class& c)
{
    WallElement w;
    w.add_term({}, c);
    return w;
}

WallElement WallElement::generator(int i)
{
    if (i < 1 || i == 2)
        throw std::invalid_argument("WallElement: no generator x" + std::to_string(i));
    WallElement w;
    w.add_term({{i, 1}}, 1);
    return w;
}

void WallElement::add_term(const Monomial& m, const mpz_class& c)
{
    if (c == 0)
        return;
    for (auto [g, e] : m)
        if (g < 1 || g == 2 || e < 1)
            throw std::invalid_argument("WallElement: malformed monomial");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int WallElement::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, 2 * monomial_degree(m));
    return d;
}

bool WallElement::is_homogeneous() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0)
            d = monomial_degree(m);
        else if (monomial_degree(m) != d)
            return false;
    }
    return true;
}

WallElement operator+(const WallElement& a, const WallElement& b)
{
    WallElement out = a;
    for (const auto& [m, c] : b.terms_)
        out.add_term(m, c);
    return out;
}

WallElement operator-(const WallElement& a, const WallElement& b)
{
    WallElement out = a;
    for (const auto& [m, c] : b.terms_)
        out.add_term(m, -c);
    return out;
}

namespace {

Monomial merge_monomials(const Monomial& x, const Monomial& y)
{
    Monomial out;
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j++]);
        } else {
            out.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

WallElement operator*(const WallElement& a, const WallElement& b)
{
    WallElement out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

WallElement operator*(const mpz_class& c, const WallElement& a)
{
    WallElement out;
    for (const auto& [m, t] : a.terms_)
        out.add_term(m, c * t);
    return out;
}

bool operator==(const WallElement& a, const WallElement& b)
{
    return a.terms_ == b.terms_;
}

std::string WallElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
        if (m.empty()) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        bool fg = true;
        for (auto [g, e] : m) {
            if (!fg)
                os << "*";
            os << "x" << g;
            if (e > 1)
                os << "^" << e;
            fg = false;
        }
    }
    return os.str();
}

namespace {

// d on a single generator.
WallElement boundary_generator(int g)
{
    if (g == 1)
        return WallElement::constant(2);
    if (g % 2 == 0)
        return WallElement::generator(g - 1);
    return WallElement::zero();
}

std::vector<int> monomial_factors(const Monomial& m)
{
    std::vector<int> fs;
    for (auto [g, e] : m)
        for (int t = 0; t < e; ++t)
            fs.push_back(g);
    return fs;
}

WallElement element_of_factors(const std::vector<int>& fs)
{
    Monomial m;
    std::vector<int> sorted = fs;
    std::sort(sorted.begin(), sorted.end());
    for (int g : sorted) {
        if (!m.empty() && m.back().first == g)
            m.back().second++;
        else
            m.emplace_back(g, 1);
    }
    WallElement w;
    w.add_term(m, 1);
    return w;
}

// d(x_g * rest) = x_g * d(rest) + d(x_g) * rest - x_1 * d(x_g) * d(rest).
WallElement boundary_factors(std::vector<int> factors)
{
    if (factors.empty())
        return WallElement::zero();
    int g = factors.front();
    std::vector<int> rest(factors.begin() + 1, factors.end());
    WallElement dg = boundary_generator(g);
    if (rest.empty())
        return dg;
    WallElement drest = boundary_factors(rest);
    WallElement xg = WallElement::generator(g);
    WallElement rest_el = element_of_factors(rest);
    return xg * drest + dg * rest_el - WallElement::generator(1) * dg * drest;
}

}  // namespace

WallElement boundary(const WallElement& a)
{
    WallElement out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> fs = monomial_factors(m);  // sorted: smallest peels first
        out = out + c * boundary_factors(fs);
    }
    return out;
}

WallElement boundary_with_peel_order(const Monomial& m, const std::vector<int>& order)
{
    std::vector<int> fs = monomial_factors(m);
    if (order.size() != fs.size())
        throw std::invalid_argument("boundary_with_peel_order: order length mismatch");
    std::vector<int> arranged;
    std::vector<bool> used(fs.size(), false);
    for (int idx : order) {
        if (idx < 0 || idx >= static_cast<int>(fs.size()) || used[static_cast<size_t>(idx)])
            throw std::invalid_argument("boundary_with_peel_order: bad permutation");
        used[static_cast<size_t>(idx)] = true;
        arranged.push_back(fs[static_cast<size_t>(idx)]);
    }
    // Recursion peels arranged[0], then arranged[1], ...
    auto rec = [&](auto&& self, size_t at) -> WallElement {
        if (at == arranged.size())
            return WallElement::zero();
        int g = arranged[at];
        WallElement dg = boundary_generator(g);
        if (at + 1 == arranged.size())
            return dg;
        WallElement drest = self(self, at + 1);
        std::vector<int> rest(arranged.begin() + static_cast<long>(at) + 1, arranged.end());
        return WallElement::generator(g) * drest + dg * element_of_factors(rest) -
               WallElement::generator(1) * dg * drest;
    };
    return rec(rec, 0);
}

WallElement y_image(int i)
{
    if (i <= 1)
        throw std::invalid_argument("y_image: i must be > 1");
    if (i == 2)
        return 2 * (WallElement::generator(1) * WallElement::generator(1));
    if (i % 2 == 1)
        return WallElement::generator(i);
    return 2 * WallElement::generator(i) -
           WallElement::generator(1) * WallElement::generator(i - 1);
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why)
    {
        throw std::invalid_argument("wall parse error at position " + std::to_string(pos) +
                                    ": " + why);
    }

    long long integer()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }

    WallElement atom()
    {
        skip_ws();
        if (accept('(')) {
            WallElement e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return power_suffix(e);
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            long long g = integer();
            return power_suffix(WallElement::generator(static_cast<int>(g)));
        }
        if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
            return power_suffix(WallElement::constant(mpz_class(static_cast<long>(integer()))));
        fail("expected a number, generator, or '('");
    }

    WallElement power_suffix(WallElement base)
    {
        while (accept('^')) {
            long long e = integer();
            WallElement acc = WallElement::constant(1);
            for (long long i = 0; i < e; ++i)
                acc = acc * base;
            base = acc;
        }
        return base;
    }

    WallElement term()
    {
        WallElement acc = atom();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = acc * atom();
            } else if (pos < s.size() &&
                       (s[pos] == 'x' || s[pos] == '(')) {  // implicit product
                acc = acc * atom();
            } else {
                return acc;
            }
        }
    }

    WallElement expr()
    {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        WallElement acc = term();
        if (neg)
            acc = mpz_class(-1) * acc;
        while (true) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
};

}  // namespace

WallElement parse(const std::string& text)
{
    Parser p(text);
    WallElement e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return e;
}

}  // namespace qtb::wall
