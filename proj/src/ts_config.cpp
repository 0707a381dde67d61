#include "admit/ts_config.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "admit/constructions.hpp"
#include "admit/error.hpp"

namespace admit {

namespace {

bool same_shape(FiniteStructure const& a, FiniteStructure const& b) {
  return a.size == b.size && a.ops == b.ops && a.relations == b.relations;
}

}  // namespace

TSVerification verify_ts_configuration(TSConfiguration const& cfg,
                                       AlterEgo const& ego) {
  FiniteStructure const power = power_structure(ego.tilde, cfg.s);
  if (substructure_closure(power, cfg.points) != cfg.points) {
    return {false, "point set is not a substructure of the power"};
  }
  auto induced = induced_substructure(power, cfg.points);
  if (!same_shape(induced.structure, cfg.x)) {
    return {false, "X differs from the substructure induced on its points"};
  }
  if (cfg.gamma.map.size() != power.size ||
      !is_struct_morphism(power, cfg.x, cfg.gamma.map)) {
    return {false, "gamma is not a morphism from the power onto X"};
  }
  if (!cfg.gamma.surjective()) {
    return {false, "gamma is not surjective"};
  }
  FiniteStructure const dual_m = dual_space(ego.base, ego);
  if (cfg.eta.map.size() != dual_m.size ||
      !is_embedding(dual_m, cfg.x, cfg.eta.map)) {
    return {false, "eta is not an embedding of D(M) into X"};
  }
  return {};
}

std::optional<TSConfiguration> configuration_on(
    AlterEgo const& ego, std::size_t s, std::vector<Element> points,
    FiniteStructure const* dual_m, FiniteStructure const* power) {
  std::optional<FiniteStructure> own_dual;
  std::optional<FiniteStructure> own_power;
  if (!dual_m) {
    own_dual = dual_space(ego.base, ego);
    dual_m = &*own_dual;
  }
  if (!power) {
    own_power = power_structure(ego.tilde, s);
    power = &*own_power;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (substructure_closure(*power, points) != points) {
    return std::nullopt;
  }
  auto sub = induced_substructure(*power, points, "X");
  auto eta = find_struct_morphism(*dual_m, sub.structure, {.embedding = true});
  if (!eta) {
    return std::nullopt;
  }
  auto gamma =
      find_struct_morphism(*power, sub.structure, {.surjective = true});
  if (!gamma) {
    return std::nullopt;
  }
  return TSConfiguration{s, std::move(points), sub.structure,
                         std::move(*gamma), std::move(*eta)};
}

TSConfiguration search_ts_configuration(AlterEgo const& ego, std::size_t s,
                                        std::size_t size_cap,
                                        TSSearchStats* stats) {
  FiniteStructure const power = power_structure(ego.tilde, s);
  FiniteStructure const dual_m = dual_space(ego.base, ego);
  if (size_cap == 0 || size_cap > power.size) {
    size_cap = power.size;
  }
  TSSearchStats local;
  TSSearchStats& st = stats ? *stats : local;

  // Every X contains an embedded copy of D(M), hence the closure of one.
  std::set<std::vector<Element>> seeds;
  for_each_struct_morphism(dual_m, power, {.embedding = true},
                           [&](std::span<Element const> m) {
                             seeds.insert(substructure_closure(power, m));
                             return true;
                           });

  // Sizes in increasing order; all closed supersets of a seed with exactly
  // k points are reached by adding one point at a time, each intermediate
  // closure staying inside the target.
  std::vector<Element> grown;
  for (std::size_t k = dual_m.size; k <= size_cap; ++k) {
    std::set<std::vector<Element>> seen;
    std::deque<std::vector<Element>> work;
    for (auto const& z : seeds) {
      if (z.size() <= k && seen.insert(z).second) {
        work.push_back(z);
      }
    }
    std::vector<std::vector<Element>> cands;
    while (!work.empty()) {
      std::vector<Element> z = std::move(work.front());
      work.pop_front();
      if (z.size() == k) {
        cands.push_back(std::move(z));
        continue;
      }
      std::vector<char> in(power.size, 0);
      for (Element p : z) {
        in[p] = 1;
      }
      for (Element p = 0; p < power.size; ++p) {
        if (in[p]) {
          continue;
        }
        grown = z;
        grown.push_back(p);
        auto w = substructure_closure(power, grown);
        if (w.size() <= k && seen.insert(w).second) {
          work.push_back(std::move(w));
        }
      }
    }
    st.substructures += seen.size();
    std::sort(cands.begin(), cands.end());
    std::vector<FiniteStructure> tested;
    for (auto const& z : cands) {
      auto sub = induced_substructure(power, z, "X");
      bool dup = false;
      for (auto const& t : tested) {
        if (structures_isomorphic(t, sub.structure)) {
          dup = true;
          break;
        }
      }
      if (dup) {
        continue;
      }
      ++st.iso_classes;
      ++st.surjection_tests;
      auto gamma =
          find_struct_morphism(power, sub.structure, {.surjective = true});
      if (gamma) {
        auto eta =
            find_struct_morphism(dual_m, sub.structure, {.embedding = true});
        return TSConfiguration{s, z, sub.structure, std::move(*gamma),
                               std::move(*eta)};
      }
      tested.push_back(std::move(sub.structure));
    }
  }
  throw SearchExhausted("no TS-configuration with at most " +
                            std::to_string(size_cap) + " points",
                        size_cap);
}

TSMResult test_spaces_method(AlterEgo const& ego, std::size_t s,
                             FiniteStructure const* hint,
                             std::size_t size_cap) {
  auto compat = check_compatibility(ego);
  if (!compat.ok) {
    throw AlgebraError("alter ego is not compatible: " + compat.violation);
  }
  if (!generating_set_of_size(ego.base, std::min(s, ego.base.size()))) {
    throw AlgebraError("'" + ego.base.name() + "' is not generated by " +
                       std::to_string(s) + " elements");
  }
  TSMResult r;
  r.dual_m = dual_space(ego.base, ego);
  if (hint) {
    FiniteStructure const power = power_structure(ego.tilde, s);
    std::vector<Element> pts;
    for (auto const& l : hint->labels) {
      auto p = power.find_label(l);
      if (!p) {
        throw AlgebraError("hint point '" + l + "' is not a point of the " +
                           std::to_string(s) + "-th power");
      }
      pts.push_back(*p);
    }
    auto cfg = configuration_on(ego, s, pts, &r.dual_m, &power);
    if (!cfg) {
      throw AlgebraError("hint '" + hint->name +
                         "' does not give a TS-configuration");
    }
    r.config = std::move(*cfg);
    r.from_hint = true;
  } else {
    r.config = search_ts_configuration(ego, s, size_cap, &r.search);
  }
  FiniteStructure const& x = r.config.x;
  r.lattice = y_substructure_lattice(x, x);
  r.maximal = r.lattice.maximal_join_irreducibles();
  std::vector<FiniteStructure> cands;
  for (std::size_t i : r.maximal) {
    cands.push_back(
        induced_substructure(x, r.lattice.members[i], "Z" + std::to_string(i))
            .structure);
  }
  if (r.maximal.size() == 1) {
    r.sweep_skipped = true;
    r.survivors = r.maximal;
  } else {
    for (std::size_t k : morphic_image_sweep(cands)) {
      r.survivors.push_back(r.maximal[k]);
    }
  }
  for (std::size_t i = 0; i < r.maximal.size(); ++i) {
    if (std::find(r.survivors.begin(), r.survivors.end(), r.maximal[i]) !=
        r.survivors.end()) {
      std::string name = "E(X)";
      if (r.survivors.size() > 1) {
        name = "E(Z" + std::to_string(r.maximal[i]) + ")";
      }
      r.algebras.push_back(eval_functor(cands[i], ego, name));
    }
  }
  return r;
}

}  // namespace admit
