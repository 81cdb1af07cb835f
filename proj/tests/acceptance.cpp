// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria with a stated time budget fail when they exceed it.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "qtbord/bordism.hpp"
#include "qtbord/localization.hpp"
#include "qtbord/numtheory.hpp"
#include "qtbord/verify.hpp"
#include "qtbord/wallring.hpp"

using namespace qtb;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << " ("
         << secs << " s)";
    if (!ok && !detail.empty())
        line << " -- " << detail;
    std::cout << line.str() << "\n" << std::flush;
    if (!ok)
        ++g_failures;
}

bool sweep_ok(const verify::SweepReport& rep, std::string& detail)
{
    if (!rep.ok()) {
        detail = rep.failures.front() + " (+" + std::to_string(rep.failures.size() - 1) +
                 " more)";
        return false;
    }
    return rep.cases > 0;
}

}  // namespace

int main()
{
    criterion(1, "s-numbers of L(n1,n2) match the closed form, n1+n2 <= 10", 10.0,
              [](std::string& detail) { return sweep_ok(verify::lemma1_sweep(10), detail); });

    criterion(2, "telescoped L combination equals (-1)^{n1} C(n1+n2+1,n1), spot 6 at (2,1)", 0,
              [](std::string& detail) {
                  if (!sweep_ok(verify::telescope_sweep(10), detail))
                      return false;
                  mpz_class spot = fam::s_number_cohomology(fam::L(2, 1)) -
                                   2 * fam::s_number_cohomology(fam::L(1, 2)) +
                                   fam::s_number_cohomology(fam::L(0, 3));
                  if (spot != 6) {
                      detail = "spot value " + spot.get_str();
                      return false;
                  }
                  return true;
              });

    criterion(3, "su_check passes on tildeL/tildeN and fails on cpn/L, dim <= 12", 0,
              [](std::string& detail) {
                  for (int n1 = 2; n1 <= 12; n1 += 2)
                      for (int n2 = 1; n1 + n2 <= 12; n2 += 2)
                          if (!qt::su_check(fam::tilde_L(n1, n2).pair)) {
                              detail = "tildeL(" + std::to_string(n1) + "," +
                                       std::to_string(n2) + ") not SU";
                              return false;
                          }
                  for (int n1 = 2; n1 <= 12; n1 += 2)
                      for (int n2 = 1; 1 + n1 + n2 <= 12; n2 += 2)
                          if (!qt::su_check(fam::tilde_N(n1, n2).pair)) {
                              detail = "tildeN(" + std::to_string(n1) + "," +
                                       std::to_string(n2) + ") not SU";
                              return false;
                          }
                  for (int n = 1; n <= 12; ++n)
                      if (qt::su_check(fam::cpn(n).pair)) {
                          detail = "cpn(" + std::to_string(n) + ") wrongly SU";
                          return false;
                      }
                  for (int n1 = 1; n1 <= 11; ++n1)
                      for (int n2 = 1; n1 + n2 <= 12; ++n2)
                          if (qt::su_check(fam::L(n1, n2).pair)) {
                              detail = "L(" + std::to_string(n1) + "," + std::to_string(n2) +
                                       ") wrongly SU";
                              return false;
                          }
                  return true;
              });

    criterion(4, "every Chern number of tildeL(2,1) and tildeN(2,1) vanishes", 5.0,
              [](std::string& detail) { return sweep_ok(verify::lowdimqt_sweep(), detail); });

    criterion(5, "spot s-numbers: tildeL(2,1)=0, tildeN(2,1)=0, tildeN(2,3)=14, tildeL(2,3)=5",
              0, [](std::string& detail) {
                  struct Case {
                      fam::FamilyPresentation f;
                      long expect;
                  };
                  std::vector<Case> cases;
                  cases.push_back({fam::tilde_L(2, 1), 0});
                  cases.push_back({fam::tilde_N(2, 1), 0});
                  cases.push_back({fam::tilde_N(2, 3), 14});
                  cases.push_back({fam::tilde_L(2, 3), 5});
                  for (const auto& c : cases) {
                      mpz_class coh = fam::s_number_cohomology(c.f);
                      mpz_class lc = loc::s_number(c.f.pair);
                      if (coh != c.expect || lc != c.expect) {
                          detail = c.f.name + ": cohomology " + coh.get_str() +
                                   ", localization " + lc.get_str() + ", expected " +
                                   std::to_string(c.expect);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "engine agreement on every instance of complex dimension <= 8", 60.0,
              [](std::string& detail) {
                  return sweep_ok(verify::engine_agreement_sweep(8), detail);
              });

    criterion(7, "number theory sweeps: lucas/granville to 2000, gcd families", 60.0,
              [](std::string& detail) {
                  return sweep_ok(verify::lucas_sweep(2000), detail) &&
                         sweep_ok(verify::granville_sweep(2000), detail) &&
                         sweep_ok(verify::gcdbinom_sweep(256), detail) &&
                         sweep_ok(verify::gcddif_sweep(64), detail) &&
                         sweep_ok(verify::nmod2_sweep(64), detail) &&
                         sweep_ok(verify::nmodp_sweep(64), detail);
              });

    criterion(8, "generator certificates: y_odd k<=16, y_even k<=16, spot shapes", 0,
              [](std::string& detail) {
                  for (int k = 2; k <= 16; ++k) {
                      bord::GeneratorCertificate c = bord::find_y_odd(k);
                      mpz_class want = mpz_class(static_cast<long>(nt::m_of(2 * k + 1))) *
                                       static_cast<long>(nt::m_of(2 * k));
                      if (c.s_value != want) {
                          detail = "y_odd(" + std::to_string(k) + "): s " +
                                   c.s_value.get_str() + " expected " + want.get_str();
                          return false;
                      }
                  }
                  for (int k = 3; k <= 16; ++k) {
                      bord::GeneratorCertificate c = bord::find_y_even(k);
                      mpz_class want = 2 * mpz_class(static_cast<long>(nt::m_of(2 * k))) *
                                       static_cast<long>(nt::m_of(2 * k - 1));
                      if (c.s_value != want) {
                          detail = "y_even(" + std::to_string(k) + "): s " +
                                   c.s_value.get_str() + " expected " + want.get_str();
                          return false;
                      }
                  }
                  bord::GeneratorCertificate y5 = bord::find_y_odd(2);
                  bord::GeneratorCertificate y6 = bord::find_y_even(3);
                  bord::GeneratorCertificate y8 = bord::find_y_even(4);
                  bool spots =
                      y5.s_value == 5 && y5.cls.terms.size() == 1 &&
                      y5.cls.terms[0].member.name == "tildeL(2,3)" && y6.s_value == 14 &&
                      y6.cls.terms.size() == 1 &&
                      y6.cls.terms[0].member.name == "tildeN(2,3)" && y8.s_value == 12 &&
                      y8.cls.terms.size() == 2 && y8.cls.terms[0].coeff == 2 &&
                      y8.cls.terms[0].member.name == "tildeN(2,5)" &&
                      y8.cls.terms[1].coeff == -1 &&
                      y8.cls.terms[1].member.name == "tildeN(4,3)";
                  if (!spots)
                      detail = "spot certificates y5/y6/y8 have unexpected shape";
                  return spots;
              });

    criterion(9, "connected sums: doubling, cancellation, realized y_even(4)", 30.0,
              [](std::string& detail) {
                  fam::FamilyPresentation m = fam::L(1, 2);
                  loc::Context single = loc::make_context(m.pair);
                  qt::CharacteristicPair dbl = connected_sum(m.pair, 0, m.pair, 0);
                  loc::Context dctx = loc::make_context(dbl);
                  for (const auto& omega : qt::all_chern_monomials(3))
                      if (loc::chern_number(dctx, omega) != 2 * loc::chern_number(single, omega)) {
                          detail = "doubling failed at " + omega.str();
                          return false;
                      }
                  qt::CharacteristicPair cancel =
                      connected_sum(m.pair, 0, reverse_orientation(m.pair), 0);
                  loc::Context cctx = loc::make_context(cancel);
                  for (const auto& omega : qt::all_chern_monomials(3))
                      if (loc::chern_number(cctx, omega) != 0) {
                          detail = "cancellation failed at " + omega.str();
                          return false;
                      }
                  qt::CharacteristicPair y8 = bord::realize_certificate(bord::find_y_even(4));
                  if (!qt::validate(y8).empty()) {
                      detail = "realized pair fails validation";
                      return false;
                  }
                  if (loc::s_number(y8) != 12) {
                      detail = "realized s-number " + loc::s_number(y8).get_str();
                      return false;
                  }
                  if (!qt::su_check(y8)) {
                      detail = "realized pair is not SU";
                      return false;
                  }
                  return true;
              });

    criterion(10, "boundary operator: d^2 = 0, peel-order independence, d(y_i) = 0", 0,
              [](std::string& detail) {
                  std::mt19937 rng(20240902);
                  std::vector<int> gens{1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
                  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
                  for (int t = 0; t < 1000; ++t) {
                      wall::Monomial mono;
                      int deg = 0;
                      while (true) {
                          int g = gens[pick(rng)];
                          if (deg + g > 20)
                              break;
                          deg += g;
                          bool found = false;
                          for (auto& [gg, e] : mono)
                              if (gg == g) {
                                  ++e;
                                  found = true;
                              }
                          if (!found)
                              mono.emplace_back(g, 1);
                      }
                      std::sort(mono.begin(), mono.end());
                      wall::WallElement e;
                      e.add_term(mono, 1);
                      if (!wall::boundary(wall::boundary(e)).is_zero()) {
                          detail = "d^2 != 0 on a degree-" + std::to_string(2 * deg) +
                                   " monomial";
                          return false;
                      }
                  }
                  // Exhaustive peel orders for <= 4 factors over a small set.
                  std::vector<int> small{1, 3, 4, 6};
                  std::vector<std::vector<int>> lists;
                  for (int a : small)
                      for (int b : small)
                          for (int c : small)
                              for (int d : small) {
                                  if (!(a <= b && b <= c && c <= d))
                                      continue;
                                  if (a + b + c + d > 16)
                                      continue;
                                  lists.push_back({a, b, c, d});
                              }
                  for (const auto& fs : lists) {
                      wall::Monomial mono;
                      for (int g : fs) {
                          if (!mono.empty() && mono.back().first == g)
                              mono.back().second++;
                          else
                              mono.emplace_back(g, 1);
                      }
                      std::vector<int> order{0, 1, 2, 3};
                      wall::WallElement ref = wall::boundary_with_peel_order(mono, order);
                      while (std::next_permutation(order.begin(), order.end()))
                          if (!(wall::boundary_with_peel_order(mono, order) == ref)) {
                              detail = "peel order changed the boundary";
                              return false;
                          }
                  }
                  for (int i = 2; i <= 20; ++i)
                      if (!wall::boundary(wall::y_image(i)).is_zero()) {
                          detail = "d(y_" + std::to_string(i) + ") != 0";
                          return false;
                      }
                  return true;
              });

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return EXIT_FAILURE;
    }
    std::cout << "all criteria passed\n";
    return EXIT_SUCCESS;
}
