#pragma once

// The acceptance grid. Each criterion is an exact check over a fixed parameter
// range; random draws come from a per-criterion mt19937_64 derived from one seed,
// so a run is reproducible and criteria can execute concurrently.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/core.hpp"
#include "ribbon/geometry.hpp"
#include "ribbon/local/deformation.hpp"
#include "ribbon/local/homology.hpp"
#include "ribbon/local/ideal.hpp"
#include "ribbon/stability.hpp"

namespace ribbon::sweep {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::int64_t kMaxG = 12;
inline constexpr std::int64_t kMaxGbar = 3;
inline constexpr std::uint64_t kPrimes[] = {5, 101};

/// RIBBON_MODULI_SEED when set and parseable, else the default.
inline std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("RIBBON_MODULI_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a summary
};

namespace detail {

class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  void fail(std::string what) {
    ++cases_;
    if (failure_.empty()) failure_ = std::move(what);
  }
  CriterionResult result(int id, std::string name) const {
    return {id, std::move(name), failure_.empty(), cases_,
            failure_.empty() ? std::to_string(cases_) + " cases" : failure_};
  }

 private:
  std::size_t cases_ = 0;
  std::string failure_;
};

inline std::string triple(std::int64_t g, std::int64_t gbar, std::int64_t d) {
  return "(g=" + std::to_string(g) + ", gbar=" + std::to_string(gbar) + ", d=" + std::to_string(d) + ")";
}

template <typename Fn>
void for_grid(Fn&& fn) {
  for (std::int64_t g = 0; g <= kMaxG; ++g) {
    for (std::int64_t gbar = 0; gbar <= kMaxGbar; ++gbar) {
      for (std::int64_t d = 0; d <= 1; ++d) fn(g, gbar, d);
    }
  }
}

inline std::uint64_t criterion_seed(std::uint64_t seed, int id) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(id)};
  std::uint32_t words[2];
  seq.generate(std::begin(words), std::end(words));
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

inline std::vector<std::int64_t> random_nonzero(std::mt19937_64& rng, std::uint64_t p, int count) {
  std::uniform_int_distribution<std::int64_t> dist(1, static_cast<std::int64_t>(p) - 1);
  std::vector<std::int64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(dist(rng));
  return out;
}

}  // namespace detail

/// |glb components| = floor((g+2)/2) - gbar (d even), floor((g+1)/2) - gbar (d odd).
inline CriterionResult component_counts() {
  detail::Tally t;
  detail::for_grid([&](std::int64_t g, std::int64_t gbar, std::int64_t d) {
    if (g <= 2 * gbar - 1) return;
    const auto table = component_table(mk_ribbon(g, gbar), d);
    const std::int64_t want = (d % 2 == 0 ? (g + 2) / 2 : (g + 1) / 2) - gbar;
    const auto got = static_cast<std::int64_t>(table.glb_components.size());
    t.check(got == want, [&] {
      return detail::triple(g, gbar, d) + ": " + std::to_string(got) + " components, expected " + std::to_string(want);
    });
  });
  return t.result(1, "component counts");
}

/// Stratum dims g - sum(b_i - 1), parity, and dim-g strata = all-ones partitions.
inline CriterionResult stratum_dims() {
  detail::Tally t;
  detail::for_grid([&](std::int64_t g, std::int64_t gbar, std::int64_t d) {
    const auto ribbon = mk_ribbon(g, gbar);
    std::set<IndexMultiset> top_dim;
    for (const auto& s : enumerate_strata(ribbon, d, false)) {
      std::int64_t excess = 0;
      std::int64_t sum = 0;
      for (auto b : s.indices.entries()) {
        excess += b - 1;
        sum += b;
      }
      t.check(s.dim == g - excess, [&] {
        return detail::triple(g, gbar, d) + ": (" + s.indices.to_string() + ") has dim " + std::to_string(s.dim);
      });
      t.check((d - sum) % 2 == 0, [&] { return detail::triple(g, gbar, d) + ": parity of (" + s.indices.to_string() + ")"; });
      if (s.dim == g) top_dim.insert(s.indices);
    }
    std::set<IndexMultiset> ones;
    for (std::int64_t len = 0; len <= g - 2 * gbar; ++len) {
      if ((d - len) % 2 == 0) ones.insert(IndexMultiset(std::vector<std::int64_t>(static_cast<std::size_t>(len), 1)));
    }
    t.check(top_dim == ones, [&] { return detail::triple(g, gbar, d) + ": dim-g strata differ from all-ones partitions"; });
  });
  return t.result(2, "stratum dimensions");
}

inline CriterionResult connectivity() {
  detail::Tally t;
  detail::for_grid([&](std::int64_t g, std::int64_t gbar, std::int64_t d) {
    const auto graph = stratification_graph(mk_ribbon(g, gbar), d);
    if (graph.empty()) return;
    t.check(graph.connected, [&] { return detail::triple(g, gbar, d) + ": graph disconnected"; });
  });
  return t.result(3, "connectivity");
}

/// gbar = 0, d = 0: one Gr-class node iff g odd, none iff g even.
inline CriterionResult rational_boundary() {
  detail::Tally t;
  for (std::int64_t g = 0; g <= kMaxG; ++g) {
    const auto graph = stratification_graph(mk_ribbon(g, 0), 0);
    const auto gr_nodes = std::count_if(graph.nodes.begin(), graph.nodes.end(),
                                        [](const GraphNode& n) { return n.kind == NodeKind::GrClass; });
    const std::int64_t want = g % 2 == 1 ? 1 : 0;
    t.check(gr_nodes == want, [&] {
      return "g=" + std::to_string(g) + ": " + std::to_string(gr_nodes) + " Gr nodes, expected " + std::to_string(want);
    });
    if (gr_nodes == 1) {
      // The boundary point is O(e/2) + O(e/2) with e = -1 - g.
      const auto& node = graph.nodes[*graph.find(NodeKind::GrClass)];
      const std::int64_t half = (-1 - g) / 2;
      t.check(node.gr && node.gr->deg_F1 == half && node.gr->deg_Ibar == half,
              [&] { return "g=" + std::to_string(g) + ": boundary class " + node.label(); });
    }
  }
  return t.result(4, "rational-ribbon boundary");
}

inline CriterionResult ext_oracle() {
  detail::Tally t;
  for (int n = 0; n <= 5; ++n) {
    for (auto p : kPrimes) {
      for (int T : {4 * n + 4, 4 * n + 6}) {
        const std::string where = "n=" + std::to_string(n) + ", p=" + std::to_string(p) + ", T=" + std::to_string(T);
        try {
          const auto ext = local::ext1_dim(n, p, T);
          t.check(ext == static_cast<std::size_t>(2 * n), [&] { return where + ": ext1 = " + std::to_string(ext); });
          const auto endo = local::endo_quotient_dim(n, p, T);
          t.check(endo == static_cast<std::size_t>(n), [&] { return where + ": End/O = " + std::to_string(endo); });
        } catch (const std::exception& e) {
          t.fail(where + ": " + e.what());
        }
      }
    }
  }
  return t.result(5, "Ext oracle");
}

inline void record_report(detail::Tally& t, const local::DeformationReport& rep, const std::string& label) {
  for (const auto& c : rep.checks) {
    t.check(c.pass, [&] {
      return label + " b=" + std::to_string(rep.b) + " p=" + std::to_string(rep.p) + " t=" + std::to_string(rep.t) +
             ": " + c.name + " (" + c.detail + ")";
    });
  }
}

inline CriterionResult deformation_one(std::uint64_t seed) {
  detail::Tally t;
  std::mt19937_64 rng(detail::criterion_seed(seed, 6));
  for (int b0 = 0; b0 <= 4; ++b0) {
    for (auto p : kPrimes) {
      for (auto tv : detail::random_nonzero(rng, p, 3)) {
        try {
          record_report(t, local::verify_deformation_I(b0, p, tv), "deformation I");
        } catch (const std::exception& e) {
          t.fail(std::string("deformation I: ") + e.what());
        }
      }
    }
  }
  return t.result(6, "deformation I flatness");
}

inline CriterionResult deformation_two(std::uint64_t seed) {
  detail::Tally t;
  std::mt19937_64 rng(detail::criterion_seed(seed, 7));
  for (int b1 = 1; b1 <= 4; ++b1) {
    for (auto p : kPrimes) {
      for (auto tv : detail::random_nonzero(rng, p, 3)) {
        try {
          record_report(t, local::verify_deformation_II(b1, p, tv), "deformation II");
        } catch (const std::exception& e) {
          t.fail(std::string("deformation II: ") + e.what());
        }
      }
    }
  }
  return t.result(7, "deformation II");
}

/// Random element of F_p[s, eps] with nonzero 1-part and degree <= max_deg.
inline local::EpsPoly random_nonzerodivisor(std::mt19937_64& rng, const local::PrimeField& f, int max_deg) {
  std::uniform_int_distribution<local::Elem> coeff(0, f.modulus() - 1);
  auto draw = [&] {
    std::vector<local::Elem> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : c) x = coeff(rng);
    return local::Poly(f, std::move(c));
  };
  while (true) {
    local::Poly p0 = draw();
    if (p0.is_zero()) continue;
    return local::EpsPoly(std::move(p0), draw());
  }
}

/// local_index_at(f (s^n, eps), 0) = n for random non-zerodivisors f, and
/// local_index_at((s^n, eps), 0) = End/O length.
inline CriterionResult local_index_twists(std::uint64_t seed) {
  detail::Tally t;
  std::mt19937_64 rng(detail::criterion_seed(seed, 8));
  for (auto p : kPrimes) {
    const local::PrimeField f(p);
    for (int n = 0; n <= 4; ++n) {
      const auto model = local::ideal_from_generators(
          f, {local::EpsPoly::eps(f), local::EpsPoly(local::Poly::monomial(f, 1, static_cast<std::size_t>(n)))});
      for (int i = 0; i < 20; ++i) {
        const auto twist = random_nonzerodivisor(rng, f, 3);
        const auto twisted = local::ideal_scale(twist, model);
        const int idx = local::local_index_at(twisted, 0);
        t.check(idx == n, [&] {
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " f=" + twist.to_string() + ": index " +
                 std::to_string(idx);
        });
      }
      const int idx = local::local_index_at(model, 0);
      const auto endo = local::endo_quotient_dim(n, p, 4 * n + 4);
      t.check(idx == n && endo == static_cast<std::size_t>(idx), [&] {
        return "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": index " + std::to_string(idx) + " vs End/O " +
               std::to_string(endo);
      });
    }
  }
  return t.result(8, "local index oracle");
}

/// gbar = 2, g in {6, 8, 10}: tangent at stable rank-2 bundles is 4g - 11 and
/// exactly the b = 0 stable points are smooth.
inline CriterionResult tangent_smoothness() {
  detail::Tally t;
  for (std::int64_t g : {6, 8, 10}) {
    const auto ribbon = mk_ribbon(g, 2);
    const auto tan = tangent_dim_vb(ribbon);
    t.check(tan && *tan == 4 * g - 11, [&] { return "g=" + std::to_string(g) + ": tangent_dim_vb mismatch"; });
    for (std::int64_t d : {0, 1}) {
      for (const auto& s : enumerate_strata(ribbon, d, false)) {
        const auto glb = mk_glb(ribbon, d, s.indices);
        const bool smooth = smoothness_verdict(ribbon, d, glb) == Smoothness::Smooth;
        t.check(smooth == (glb.b() == 0), [&] {
          return detail::triple(g, 2, d) + ": (" + s.indices.to_string() + ") smooth=" + (smooth ? "yes" : "no");
        });
      }
      const auto vb = mk_vb(ribbon, ribbon.vb_degree(d), std::nullopt, StabilityStatus::Stable);
      t.check(smoothness_verdict(ribbon, d, vb) != Smoothness::Smooth,
              [&] { return detail::triple(g, 2, d) + ": stable rank-2 bundle marked smooth"; });
    }
  }
  return t.result(9, "tangent and smoothness");
}

/// Random valid descriptor near the stability threshold, degree of the same parity as d.
inline GLBDescriptor random_descriptor(std::mt19937_64& rng, const RibbonInvariants& ribbon, std::int64_t d) {
  std::uniform_int_distribution<std::int64_t> shift(-5, 5);
  const std::int64_t deg = d + 2 * shift(rng);
  const std::int64_t top = std::max<std::int64_t>(ribbon.stable_index_bound() + 3, 2);
  std::uniform_int_distribution<std::int64_t> pick_b(0, top);
  std::int64_t b = pick_b(rng);
  if ((deg - b) % 2 != 0) b = b == top ? b - 1 : b + 1;
  std::vector<std::int64_t> parts;
  std::int64_t left = b;
  while (left > 0) {
    std::uniform_int_distribution<std::int64_t> part(1, left);
    parts.push_back(part(rng));
    left -= parts.back();
  }
  return mk_glb(ribbon, deg, std::move(parts));
}

inline CriterionResult slope_coherence(std::uint64_t seed) {
  detail::Tally t;
  std::mt19937_64 rng(detail::criterion_seed(seed, 10));
  detail::for_grid([&](std::int64_t g, std::int64_t gbar, std::int64_t d) {
    const auto ribbon = mk_ribbon(g, gbar);
    for (int i = 0; i < 500; ++i) {
      const auto glb = random_descriptor(rng, ribbon, d);
      const Verdict v = classify_glb(ribbon, glb);
      for (std::int64_t degL : {1, 2, 7}) {
        const auto sl = slopes(ribbon, degL, glb);
        const Verdict by_slope = sl.mu_Ibar > sl.mu_F1    ? Verdict::Stable
                                 : sl.mu_Ibar == sl.mu_F1 ? Verdict::StrictlySemistable
                                                          : Verdict::Unstable;
        t.check(v == by_slope, [&] {
          return detail::triple(g, gbar, glb.d()) + " indices (" + glb.indices().to_string() + ") degL=" +
                 std::to_string(degL) + ": " + std::string(to_string(v)) + " vs slopes " +
                 std::string(to_string(by_slope));
        });
      }
    }
  });
  return t.result(10, "slope coherence");
}

/// All criteria, run concurrently, returned in id order.
inline std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<std::function<CriterionResult()>> jobs = {
      component_counts,
      stratum_dims,
      connectivity,
      rational_boundary,
      ext_oracle,
      [seed] { return deformation_one(seed); },
      [seed] { return deformation_two(seed); },
      [seed] { return local_index_twists(seed); },
      tangent_smoothness,
      [seed] { return slope_coherence(seed); },
  };
  std::vector<std::future<CriterionResult>> running;
  running.reserve(jobs.size());
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < running.size(); ++i) {
    try {
      out.push_back(running[i].get());
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(i) + 1, "criterion " + std::to_string(i + 1), false, 0, e.what()});
    }
  }
  return out;
}

}  // namespace ribbon::sweep
