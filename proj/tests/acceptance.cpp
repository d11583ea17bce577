// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Golden fixtures are the expected constituent tables; every
// comparison is bit-exact rational arithmetic.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "support/naive_quasi.hpp"
#include "support/random_matrices.hpp"
#include "zqcode/families.hpp"
#include "zqcode/json_io.hpp"
#include "zqcode/minweight.hpp"
#include "zqcode/oracle.hpp"
#include "zqcode/snf.hpp"
#include "zqcode/tutte.hpp"
#include "zqcode/verify.hpp"

#ifndef ZQCODE_GOLDEN_DIR
#define ZQCODE_GOLDEN_DIR "tests/golden"
#endif

using namespace zqcode;
using zqcode::testing::naive_weight_quasi;
using zqcode::testing::random_matrix;

namespace {

const std::vector<std::pair<std::string, long>> kGolden = {
    {"diag_2_4", 4},        {"b2_arrangement", 2}, {"twice_identity", 2},
    {"hamming_7_4", 2},     {"ext_hamming_8_4", 6}, {"simplex_7_3", 2},
    {"kerdock_k2", 3},      {"cycle4_incidence", 1}, {"kerdock_k4", 2},
    {"p8_matroid", 4},      {"z5_spike", 12},
};

struct Cache {
    GoldenFixture fixture;
    DivisorProfile profile;
    WeightQuasi wq;
};

std::vector<Cache>& golden_cache() {
    static std::vector<Cache> cache = [] {
        std::vector<Cache> out;
        for (const auto& [name, rho0] : kGolden) {
            GoldenFixture fx = load_golden_fixture(std::string(ZQCODE_GOLDEN_DIR) + "/" + name + ".json");
            DivisorProfile p = build_profile(fx.matrix);
            WeightQuasi wq = weight_quasi(p);
            out.push_back({std::move(fx), std::move(p), std::move(wq)});
        }
        return out;
    }();
    return cache;
}

int failures = 0;

void criterion(int number, const std::string& description, double budget_seconds,
               const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream why;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(why);
        ok = why.str().empty();
    } catch (const std::exception& e) {
        ok = false;
        why << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        why << " [runtime " << elapsed << "s exceeds " << budget_seconds << "s]";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << description
              << "  (" << elapsed << "s)\n";
    if (!ok) {
        std::cout << "       " << why.str() << "\n";
        ++failures;
    }
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    criterion(1, "golden-table reproduction, bit-exact", 10.0, [](std::ostringstream& why) {
        for (const auto& entry : golden_cache())
            if (entry.wq != entry.fixture.weight_quasi) why << entry.fixture.name << " differs; ";
    });

    criterion(2, "oracle equivalence for q = 1..12", 60.0, [](std::ostringstream& why) {
        for (const auto& entry : golden_cache())
            for (long q = 1; q <= 12; ++q) {
                const auto dist = weight_distribution(entry.profile, entry.wq, q);
                const auto oracle = oracle_enumerate(entry.fixture.matrix, q);
                if (dist.counts != oracle.distribution.counts) {
                    why << entry.fixture.name << " at q=" << q << "; ";
                    return;
                }
            }
    });

    criterion(3, "lcm periods match the published values", 5.0, [](std::ostringstream& why) {
        for (std::size_t i = 0; i < kGolden.size(); ++i)
            if (golden_cache()[i].profile.lcm_period() != kGolden[i].second)
                why << kGolden[i].first << ": rho0=" << golden_cache()[i].profile.lcm_period().get_str()
                    << " expected " << kGolden[i].second << "; ";
    });

    criterion(4, "minimum-weight periodicity and boundary cases", 30.0, [](std::ostringstream& why) {
        for (const auto& entry : golden_cache()) {
            const BigInt rho0 = entry.profile.lcm_period();
            for (const BigInt& m : entry.profile.period_divisors()) {
                const auto gmw = generic_min_weight(entry.profile, entry.wq, m);
                for (BigInt q = m + 1; q <= 4 * rho0 + m; ++q) {
                    if (gcd_int(q, rho0) != m) continue;
                    if (min_weight_at(entry.profile, entry.wq, q) != gmw.d_prime) {
                        why << entry.fixture.name << " class " << m.get_str() << " at q=" << q.get_str()
                            << "; ";
                        return;
                    }
                }
            }
        }
        const Cache& kerdock = golden_cache()[8];
        if (min_weight_at(kerdock.profile, kerdock.wq, 2) != MinWeight::finite(4) ||
            min_weight_at(kerdock.profile, kerdock.wq, 4) != MinWeight::finite(2))
            why << "kerdock_k4 boundary d_2=4 > d_4=2 not reproduced; ";
        const Cache& diag = golden_cache()[0];
        const auto verdict = stability_check(diag.profile, diag.wq, 4);
        const BigInt last = diag.profile.full_chain().divisors.back();
        if (!verdict.stable || gcd_int(4, last) == 1)
            why << "diag_2_4 must be stable at m=4 with gcd(4, e_r) != 1; ";
    });

    criterion(5, "closed family formulas equal the pipeline (k=2..5, q=1..30)", 120.0,
              [](std::ostringstream& why) {
                  for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z})
                      for (int k = 2; k <= 5; ++k) {
                          const FamilySpec spec = make_family(tag, k);
                          const DivisorProfile profile = build_profile(spec.generator);
                          const WeightQuasi wq = weight_quasi(profile);
                          const QuasiPolynomial chi = characteristic_quasi(profile, wq);
                          for (long q = 1; q <= 30; ++q)
                              if (Rational(char_quasi_closed(tag, k, q)) != chi.eval(q)) {
                                  why << family_tag_name(tag) << k << " at q=" << q << "; ";
                                  return;
                              }
                          if (tag == FamilyTag::Z && k == 5 &&
                              chi.constituents.at(1) != UniPoly{-75, 155, -120, 50, -11, 1})
                              why << "Z5 coprime constituent mismatch; ";
                      }
              });

    criterion(6, "minimum periods equal lcm(1..k-1) for k=2..6", 60.0, [](std::ostringstream& why) {
        const std::map<int, long> expected{{2, 1}, {3, 2}, {4, 6}, {5, 12}, {6, 60}};
        for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z}) {
            for (int k = 2; k <= 5; ++k) {
                const FamilySpec spec = make_family(tag, k);
                const DivisorProfile profile = build_profile(spec.generator);
                const QuasiPolynomial chi = characteristic_quasi(profile, weight_quasi(profile));
                if (minimum_period(chi) != expected.at(k))
                    why << family_tag_name(tag) << k << " pipeline period; ";
            }
            if (minimum_period(closed_char_quasi(tag, 6)) != expected.at(6))
                why << family_tag_name(tag) << "6 closed-form period; ";
        }
    });

    criterion(7, "both enumerator/Tutte identities on the golden set", 30.0,
              [](std::ostringstream& why) {
                  const std::pair<int, int> points[] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}};
                  for (const auto& entry : golden_cache()) {
                      const TutteQuasi tq = tutte_quasi(entry.profile);
                      for (long q = 1; q <= 8; ++q)
                          for (const auto& [x, y] : points)
                              if (!greene_forward_check(entry.profile, entry.wq, tq, q, Rational(x),
                                                        Rational(y))
                                       .ok) {
                                  why << entry.fixture.name << " forward q=" << q << "; ";
                                  return;
                              }
                      for (long u = 2; u <= 6; ++u)
                          for (long v = 2; v <= 6; ++v)
                              if (!greene_inverse_check(entry.profile, entry.wq, tq, u, v).ok) {
                                  why << entry.fixture.name << " inverse (" << u << "," << v << "); ";
                                  return;
                              }
                  }
              });

    criterion(8, "property suites: transform vs naive, SNF oracle, divisibility, monicity, ladder", 120.0,
              [](std::ostringstream& why) {
                  std::mt19937_64 rng(20250808);
                  std::uniform_int_distribution<int> rows(1, 4), cols(1, 10);
                  for (int trial = 0; trial < 50; ++trial) {
                      const IntMatrix g = random_matrix(rng, rows(rng), cols(rng), -3, 3);
                      const DivisorProfile p = build_profile(g);
                      for (long q = 1; q <= 6; ++q) {
                          const auto fast = weight_class(p, q);
                          const auto slow = zqcode::testing::naive_class_constituents(
                              p, gcd_int(q, p.lcm_period()));
                          if (fast != slow) {
                              why << "transform/naive mismatch on trial " << trial
                                  << " at q=" << q << "; ";
                              return;
                          }
                      }
                  }
                  std::uniform_int_distribution<int> sdim(1, 4);
                  for (int trial = 0; trial < 30; ++trial) {
                      const IntMatrix m = random_matrix(rng, sdim(rng), sdim(rng) + 2, -4, 4);
                      const DivisorChain chain = smith_divisors(m);
                      BigInt prod = 1;
                      for (int j = 1; j <= chain.rank; ++j) {
                          prod *= chain.divisors[static_cast<std::size_t>(j - 1)];
                          if (prod != minor_gcd(m, j)) {
                              why << "SNF product / minor gcd mismatch; ";
                              return;
                          }
                      }
                  }
                  // Divisibility invariants on random nested subset pairs.
                  std::uniform_int_distribution<int> qpick(1, 24);
                  for (int trial = 0; trial < 20; ++trial) {
                      const IntMatrix g = random_matrix(rng, 3, 6, -4, 4);
                      const DivisorProfile p = build_profile(g);
                      std::uniform_int_distribution<std::uint32_t> mask_pick(0, p.full_mask());
                      for (int pair = 0; pair < 40; ++pair) {
                          const std::uint32_t a = mask_pick(rng), b = mask_pick(rng);
                          const std::uint32_t sub = a & b, super = a | b;
                          const DivisorChain cs = p.chain(sub), cb = p.chain(super);
                          BigInt prod_sub = 1, prod_super = 1, gs = 1, gb = 1;
                          const BigInt q = qpick(rng);
                          for (int l = 0; l < cs.rank; ++l) {
                              prod_sub *= cs.divisors[static_cast<std::size_t>(l)];
                              prod_super *= cb.divisors[static_cast<std::size_t>(l)];
                              gs *= gcd_int(q, cs.divisors[static_cast<std::size_t>(l)]);
                              gb *= gcd_int(q, cb.divisors[static_cast<std::size_t>(l)]);
                              if (prod_sub % prod_super != 0 || gs % gb != 0) {
                                  why << "divisibility invariant violated; ";
                                  return;
                              }
                          }
                      }
                  }
                  for (const auto& entry : golden_cache()) {
                      const QuasiPolynomial chi = characteristic_quasi(entry.profile, entry.wq);
                      for (const auto& [m, c] : chi.constituents)
                          if (!c.is_monic() || !c.is_integral()) {
                              why << entry.fixture.name << " chi not monic over Z; ";
                              return;
                          }
                      for (const BigInt& m : entry.profile.period_divisors()) {
                          const auto ladder = degree_ladder(entry.profile, entry.wq, m);
                          if (static_cast<int>(ladder.size()) != entry.wq.rank + 1) {
                              why << entry.fixture.name << " ladder size; ";
                              return;
                          }
                      }
                  }
              });

    criterion(9, "family parity obstructions and minimum weights (k=2..6, q=2..12)", 180.0,
              [](std::ostringstream& why) {
                  for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z})
                      for (int k = 2; k <= 6; ++k) {
                          const FamilySpec spec = make_family(tag, k);
                          for (long q = 2; q <= 12; ++q) {
                              const OracleResult oracle = oracle_enumerate(spec.generator, q);
                              if (!parity_obstruction(tag, k, oracle.distribution)) {
                                  why << family_tag_name(tag) << k << " parity at q=" << q << "; ";
                                  return;
                              }
                              if (oracle.min_weight != MinWeight::finite(family_min_weight(tag, k))) {
                                  why << family_tag_name(tag) << k << " min weight at q=" << q << "; ";
                                  return;
                              }
                          }
                      }
              });

    criterion(10, "profile + weight quasi-polynomial for a random 6x16 matrix", 60.0,
              [](std::ostringstream& why) {
                  std::mt19937_64 rng(424242);
                  const IntMatrix g = random_matrix(rng, 6, 16, -2, 2);
                  const DivisorProfile p = build_profile(g);
                  // Generic matrices have astronomically many divisor classes
                  // (here rho0 has period_divisor_count() of them), so the
                  // quasi-polynomial is served per class: each of these hits a
                  // distinct class and runs the full n*2^n transform.
                  for (long q = 1; q <= 24; ++q) {
                      const auto f = weight_class(p, q);
                      if (f[0] != UniPoly::constant(1)) {
                          why << "class of q=" << q << " broken; ";
                          return;
                      }
                  }
                  for (long q : {7, 12}) {
                      const auto dist = weight_distribution(p, q);
                      const auto oracle = oracle_enumerate(g, q);
                      if (dist.counts != oracle.distribution.counts) {
                          why << "oracle mismatch at q=" << q << "; ";
                          return;
                      }
                  }
              });

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures;
}
