#include "admit/admissibility.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "admit/error.hpp"
#include "admit/kernels.hpp"

namespace admit {

namespace {

using Clock = std::chrono::steady_clock;

unsigned resolve_workers(unsigned w) {
  if (w == 0) {
    w = std::thread::hardware_concurrency();
  }
  return w == 0 ? 1 : w;
}

// Odometer over {0..n-1}^k with the first coordinate slowest. `test`
// returns true on a counterexample. The reported witness is the first in
// odometer order whatever the worker count: work is split by the value of
// the first coordinate and the least such value with a hit wins.
template <typename Test>
std::optional<std::vector<Element>> odometer(std::size_t n, std::size_t k,
                                             unsigned workers,
                                             std::uint64_t& evaluations,
                                             Test const& test) {
  if (k == 0) {
    ++evaluations;
    std::vector<Element> none;
    if (test(none)) {
      return none;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> best{n};
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> evals{0};
  std::vector<std::optional<std::vector<Element>>> found(n);

  auto worker = [&] {
    std::vector<Element> v(k);
    std::uint64_t local = 0;
    while (true) {
      std::size_t first = next.fetch_add(1);
      if (first >= n || first > best.load()) {
        break;
      }
      std::fill(v.begin(), v.end(), 0);
      v[0] = static_cast<Element>(first);
      while (true) {
        ++local;
        if (test(v)) {
          found[first] = v;
          std::size_t cur = best.load();
          while (first < cur && !best.compare_exchange_weak(cur, first)) {
          }
          break;
        }
        std::size_t i = k;
        bool done = true;
        while (i > 1) {
          --i;
          if (++v[i] < n) {
            done = false;
            break;
          }
          v[i] = 0;
        }
        if (done) {
          break;
        }
      }
    }
    evals += local;
  };

  workers = std::min<unsigned>(resolve_workers(workers),
                               static_cast<unsigned>(n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  evaluations += evals.load();
  std::size_t b = best.load();
  if (b < n) {
    return found[b];
  }
  return std::nullopt;
}

Assignment to_assignment(QuasiIdentity const& q,
                         std::vector<std::size_t> const& order,
                         std::vector<Element> const& values) {
  Assignment a;
  a.values.assign(q.var_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    a.values[order[i]] = values[i];
  }
  return a;
}

struct CompiledQid {
  std::vector<std::pair<CompiledTerm, CompiledTerm>> premises;
  std::pair<CompiledTerm, CompiledTerm> conclusion;

  CompiledQid(QuasiIdentity const& q, Signature const& sig) {
    for (auto const& p : q.premises) {
      premises.emplace_back(CompiledTerm(p.lhs, sig), CompiledTerm(p.rhs, sig));
    }
    conclusion = {CompiledTerm(q.conclusion.lhs, sig),
                  CompiledTerm(q.conclusion.rhs, sig)};
  }

  bool premises_hold(FiniteAlgebra const& a,
                     std::span<Element const> vars) const {
    for (auto const& [l, r] : premises) {
      if (l.eval(a, vars) != r.eval(a, vars)) {
        return false;
      }
    }
    return true;
  }
  bool conclusion_holds(FiniteAlgebra const& a,
                        std::span<Element const> vars) const {
    return conclusion.first.eval(a, vars) == conclusion.second.eval(a, vars);
  }
};

}  // namespace

CheckReport check_validity(GeneratorSet const& k, QuasiIdentity const& q,
                           CheckOptions opts) {
  auto const start = Clock::now();
  CheckReport r;
  r.route = "direct";
  auto const order = q.variables_by_occurrence();
  std::size_t const nv = q.var_count();
  for (std::size_t i = 0; i < k.size(); ++i) {
    FiniteAlgebra const& a = k[i];
    CompiledQid const cq(q, a.signature());
    auto hit = odometer(
        a.size(), order.size(), opts.workers, r.evaluations,
        [&](std::span<Element const> v) {
          Element vars[16];
          std::vector<Element> big;
          Element* p = vars;
          if (nv > 16) {
            big.resize(nv);
            p = big.data();
          }
          std::fill(p, p + nv, 0);
          for (std::size_t j = 0; j < order.size(); ++j) {
            p[order[j]] = v[j];
          }
          std::span<Element const> s(p, nv);
          return cq.premises_hold(a, s) && !cq.conclusion_holds(a, s);
        });
    if (hit) {
      r.valid = false;
      r.witness = Witness{i, to_assignment(q, order, *hit)};
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckReport check_validity_free(FreeAlgebra const& f, QuasiIdentity const& q,
                                CheckOptions opts) {
  auto const start = Clock::now();
  CheckReport r;
  r.route = "free";
  FiniteAlgebra const& m = f.base();
  std::size_t const n = m.size();
  auto const order = q.variables_by_occurrence();
  std::size_t const k = order.size();
  std::size_t const nv = q.var_count();
  CompiledQid const cq(q, m.signature());

  // Classify every point of M^k once.
  std::size_t points = 1;
  for (std::size_t j = 0; j < k; ++j) {
    points *= n;
    if (points > (std::size_t{1} << 24)) {
      throw AlgebraError("too many variables for the free-algebra route");
    }
  }
  std::vector<kernels::Byte> flags(points);
  bool any_bad = false;
  std::vector<Element> vars(nv, 0);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = k; j-- > 0;) {
      vars[order[j]] = static_cast<Element>(rest % n);
      rest /= n;
    }
    kernels::Byte b = 0;
    bool const prem = cq.premises_hold(m, vars);
    bool const conc = cq.conclusion_holds(m, vars);
    b |= prem ? kernels::kPremiseBit : 0;
    b |= conc ? kernels::kConclusionBit : 0;
    any_bad = any_bad || (prem && !conc);
    flags[idx] = b;
  }
  if (any_bad) {
    auto const& kern = kernels::active();
    std::size_t const w = f.width();
    auto hit = odometer(f.size(), k, opts.workers, r.evaluations,
                        [&](std::span<Element const> v) {
                          kernels::Byte const* cols[16];
                          std::vector<kernels::Byte const*> big;
                          kernels::Byte const** c = cols;
                          if (k > 16) {
                            big.resize(k);
                            c = big.data();
                          }
                          for (std::size_t j = 0; j < k; ++j) {
                            c[j] = f.coords(v[j]).data();
                          }
                          return kern.scan(flags.data(), n, c, k, w) ==
                                 kernels::Scan::counterexample;
                        });
    if (hit) {
      r.valid = false;
      r.witness = Witness{0, to_assignment(q, order, *hit)};
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckReport is_admissible(FiniteAlgebra const& m, std::size_t s,
                          QuasiIdentity const& q, Route via,
                          GeneratorSet const& test_set,
                          FreeAlgebraOptions free_opts, CheckOptions opts) {
  if (via == Route::free) {
    FreeAlgebra const f = free_algebra(m, s, free_opts);
    return check_validity_free(f, q, opts);
  }
  if (test_set.empty()) {
    throw AlgebraError("is_admissible: the test route needs a test set");
  }
  CheckReport r = check_validity(test_set, q, opts);
  r.route = "test";
  return r;
}

std::vector<Term> counterexample_substitution(CheckReport const& report,
                                              FreeAlgebra const& f) {
  if (!report.witness) {
    throw AlgebraError("counterexample_substitution: report has no witness");
  }
  if (!f.has_terms()) {
    throw AlgebraError(
        "counterexample_substitution: witness is not from a free algebra "
        "with term representatives");
  }
  std::vector<Term> out;
  for (Element e : report.witness->assignment.values) {
    if (e >= f.size()) {
      throw AlgebraError("counterexample_substitution: element out of range");
    }
    out.push_back(f.term_of(e));
  }
  return out;
}

RandomQidGenerator::RandomQidGenerator(Signature sig, std::uint64_t seed,
                                       RandomQidOptions opts)
    : sig_(std::move(sig)), opts_(opts), rng_(seed) {}

Term RandomQidGenerator::term(std::size_t depth) {
  std::vector<std::size_t> consts;
  std::vector<std::size_t> ops;
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    (sig_[i].arity == 0 ? consts : ops).push_back(i);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (depth == 0 || ops.empty() || coin(rng_) < 0.3) {
    if (!consts.empty() && coin(rng_) < 0.15) {
      std::uniform_int_distribution<std::size_t> pick(0, consts.size() - 1);
      return Term::apply(sig_[consts[pick(rng_)]].name);
    }
    std::uniform_int_distribution<std::size_t> var(0, opts_.max_vars - 1);
    return Term::variable(var(rng_));
  }
  std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
  auto const& op = sig_[ops[pick(rng_)]];
  std::vector<Term> args;
  for (int i = 0; i < op.arity; ++i) {
    args.push_back(term(depth - 1));
  }
  return Term::apply(op.name, std::move(args));
}

QuasiIdentity RandomQidGenerator::next() {
  std::uniform_int_distribution<std::size_t> np(0, opts_.max_premises);
  std::uniform_int_distribution<std::size_t> dp(0, opts_.max_depth);
  QuasiIdentity q;
  std::size_t const count = np(rng_);
  for (std::size_t i = 0; i < count; ++i) {
    Term l = term(dp(rng_));
    Term r = term(dp(rng_));
    q.premises.push_back({std::move(l), std::move(r)});
  }
  Term l = term(dp(rng_));
  Term r = term(dp(rng_));
  q.conclusion = {std::move(l), std::move(r)};
  return q;
}

}  // namespace admit
