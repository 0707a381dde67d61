#include "admit/homomorphism.hpp"

#include <algorithm>

#include "admit/constructions.hpp"
#include "admit/error.hpp"

namespace admit {

bool Homomorphism::injective() const {
  std::vector<char> seen(target.size(), 0);
  for (Element v : map) {
    if (seen[v]) {
      return false;
    }
    seen[v] = 1;
  }
  return true;
}

bool Homomorphism::surjective() const {
  std::vector<char> seen(target.size(), 0);
  std::size_t hit = 0;
  for (Element v : map) {
    if (!seen[v]) {
      seen[v] = 1;
      ++hit;
    }
  }
  return hit == target.size();
}

Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
  if (f.target.size() != g.source.size()) {
    throw AlgebraError("compose: codomain/domain size mismatch");
  }
  std::vector<Element> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = g.map[f.map[i]];
  }
  return {f.source, g.target, std::move(m)};
}

bool preserves_operations(FiniteAlgebra const& a, FiniteAlgebra const& b,
                          std::span<Element const> map) {
  if (!(a.signature() == b.signature()) || map.size() != a.size()) {
    return false;
  }
  std::size_t const n = a.size();
  Signature const& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int const ar = sig[op].arity;
    std::size_t const len = table_size(n, ar);
    std::vector<Element> args(static_cast<std::size_t>(ar));
    std::vector<Element> imgs(static_cast<std::size_t>(ar));
    for (std::size_t idx = 0; idx < len; ++idx) {
      std::size_t rest = idx;
      for (int j = ar; j-- > 0;) {
        auto const u = static_cast<std::size_t>(j);
        args[u] = static_cast<Element>(rest % n);
        imgs[u] = map[args[u]];
        rest /= n;
      }
      if (map[a.table(op)[idx]] != b.apply(op, imgs)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Generator-first backtracking. Once generator images are fixed, every other
// element's image is forced; forcing is done incrementally (semi-naive) so
// each operation instance is examined once per branch.
class HomSearcher {
 public:
  HomSearcher(FiniteAlgebra const& a, FiniteAlgebra const& b, HomSearch f,
              std::function<bool(std::span<Element const>)> const& visit)
      : a_(a),
        b_(b),
        filter_(f),
        visit_(visit),
        n_(a.size()),
        m_(b.size()),
        gens_(generating_set(a)),
        h_(n_, kUnset),
        used_(m_, 0) {
    order_.reserve(n_);
  }

  void run() {
    if (filter_.injective && n_ > m_) {
      return;
    }
    if (filter_.surjective && m_ > n_) {
      return;
    }
    Signature const& sig = a_.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      if (sig[op].arity == 0 && !assign(a_.constant(op), b_.constant(op))) {
        return;
      }
    }
    if (!propagate(0)) {
      return;
    }
    descend(0);
  }

 private:
  bool assign(Element r, Element v) {
    if (h_[r] != kUnset) {
      return h_[r] == v;
    }
    if (filter_.injective && used_[v]) {
      return false;
    }
    h_[r] = v;
    if (used_[v]++ == 0) {
      ++hits_;
    }
    order_.push_back(r);
    return true;
  }

  void undo(std::size_t mark) {
    while (order_.size() > mark) {
      Element r = order_.back();
      order_.pop_back();
      if (--used_[h_[r]] == 0) {
        --hits_;
      }
      h_[r] = kUnset;
    }
  }

  bool propagate(std::size_t pos) {
    Signature const& sig = a_.signature();
    std::vector<Element> args;
    std::vector<Element> imgs;
    std::vector<std::size_t> idx;
    for (; pos < order_.size(); ++pos) {
      Element const x = order_[pos];
      for (std::size_t op = 0; op < sig.size(); ++op) {
        int const ar = sig[op].arity;
        if (ar == 1) {
          if (!assign(a_.unary(op, x), b_.unary(op, h_[x]))) {
            return false;
          }
        } else if (ar == 2) {
          for (std::size_t j = 0; j <= pos; ++j) {
            Element const y = order_[j];
            if (!assign(a_.binary(op, x, y), b_.binary(op, h_[x], h_[y])) ||
                !assign(a_.binary(op, y, x), b_.binary(op, h_[y], h_[x]))) {
              return false;
            }
          }
        } else if (ar > 2) {
          auto const k = static_cast<std::size_t>(ar);
          args.assign(k, 0);
          imgs.assign(k, 0);
          idx.assign(k, 0);
          while (true) {
            bool has_pos = false;
            for (std::size_t i = 0; i < k; ++i) {
              has_pos = has_pos || idx[i] == pos;
            }
            if (has_pos) {
              for (std::size_t i = 0; i < k; ++i) {
                args[i] = order_[idx[i]];
                imgs[i] = h_[args[i]];
              }
              if (!assign(a_.apply(op, args), b_.apply(op, imgs))) {
                return false;
              }
            }
            std::size_t i = k;
            bool done = true;
            while (i > 0) {
              --i;
              if (++idx[i] <= pos) {
                done = false;
                break;
              }
              idx[i] = 0;
            }
            if (done) {
              break;
            }
          }
        }
      }
    }
    return true;
  }

  void descend(std::size_t gi) {
    if (stop_) {
      return;
    }
    if (filter_.surjective && m_ - hits_ > n_ - order_.size()) {
      return;
    }
    if (gi == gens_.size()) {
      if (filter_.surjective && hits_ != m_) {
        return;
      }
      if (!visit_(h_)) {
        stop_ = true;
      }
      return;
    }
    Element const g = gens_[gi];
    if (h_[g] != kUnset) {
      descend(gi + 1);
      return;
    }
    for (Element v = 0; v < m_ && !stop_; ++v) {
      std::size_t const mark = order_.size();
      if (assign(g, v) && propagate(mark)) {
        descend(gi + 1);
      }
      undo(mark);
    }
  }

  FiniteAlgebra const& a_;
  FiniteAlgebra const& b_;
  HomSearch filter_;
  std::function<bool(std::span<Element const>)> const& visit_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Element> gens_;
  std::vector<Element> h_;
  std::vector<std::uint32_t> used_;
  std::vector<Element> order_;
  std::size_t hits_ = 0;
  bool stop_ = false;
};

}  // namespace

void for_each_homomorphism(
    FiniteAlgebra const& a, FiniteAlgebra const& b, HomSearch filter,
    std::function<bool(std::span<Element const>)> const& visit) {
  if (!(a.signature() == b.signature())) {
    throw AlgebraError("homomorphism search: signature mismatch between '" +
                       a.name() + "' and '" + b.name() + "'");
  }
  HomSearcher(a, b, filter, visit).run();
}

std::vector<Homomorphism> enumerate_homomorphisms(FiniteAlgebra const& a,
                                                  FiniteAlgebra const& b,
                                                  HomMode mode) {
  HomSearch f;
  f.injective = mode == HomMode::injective;
  f.surjective = mode == HomMode::surjective;
  std::vector<std::vector<Element>> maps;
  for_each_homomorphism(a, b, f, [&](std::span<Element const> h) {
    maps.emplace_back(h.begin(), h.end());
    return mode != HomMode::first;
  });
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    out.push_back({a, b, std::move(m)});
  }
  return out;
}

std::size_t count_homomorphisms(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                HomSearch filter) {
  std::size_t count = 0;
  for_each_homomorphism(a, b, filter, [&](std::span<Element const>) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Homomorphism> find_homomorphism(FiniteAlgebra const& a,
                                              FiniteAlgebra const& b,
                                              HomSearch filter) {
  std::optional<Homomorphism> out;
  for_each_homomorphism(a, b, filter, [&](std::span<Element const> h) {
    out = Homomorphism{a, b, std::vector<Element>(h.begin(), h.end())};
    return false;
  });
  return out;
}

std::optional<Homomorphism> isomorphism(FiniteAlgebra const& a,
                                        FiniteAlgebra const& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) {
    return std::nullopt;
  }
  return find_homomorphism(a, b, {.injective = true});
}

}  // namespace admit
