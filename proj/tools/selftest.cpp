#include "selftest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "logizono/logizono.hpp"

namespace logizono::cli {

namespace {

constexpr std::array kBinaryGates{Gate::Xor, Gate::Xnor, Gate::And, Gate::Nand,
                                  Gate::Or,  Gate::Nor};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  BinaryVector vec(std::size_t dim) {
    BinaryVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v.set(i, rng_() & 1);
    return v;
  }

  // Ids come from a small pool so two draws often share factors.
  PolyLogicalZonotope poly(std::size_t n, const std::vector<FactorId>& pool) {
    const std::size_t h = below(4);
    const std::size_t p = below(std::min<std::size_t>(pool.size(), 3) + 1);
    std::vector<FactorId> ids = pool;
    std::shuffle(ids.begin(), ids.end(), rng_);
    ids.resize(p);
    BinaryMatrix g(n), e(p);
    for (std::size_t i = 0; i < h; ++i) {
      g.push_back(vec(n));
      e.push_back(vec(p));
    }
    return PolyLogicalZonotope(vec(n), std::move(g), std::move(e), std::move(ids));
  }

  LogicalZonotope logical(std::size_t n) {
    BinaryMatrix g(n);
    for (std::size_t i = below(4); i > 0; --i) g.push_back(vec(n));
    return LogicalZonotope(vec(n), std::move(g));
  }

 private:
  std::mt19937_64 rng_;
};

// Scalar semantics: points for every assignment of the listed factors.
BinaryVector point_at(const PolyLogicalZonotope& z, const std::map<FactorId, bool>& alpha) {
  BinaryVector a(z.factor_count());
  for (std::size_t k = 0; k < z.factor_count(); ++k) a.set(k, alpha.at(z.ids()[k]));
  return pz_eval_at(z, a);
}

struct Tally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;

  void record(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }
};

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  Gen gen(options.seed);
  std::vector<Tally> tallies{{"poly minkowski == pointwise image"},
                             {"poly exact == scalar gate per assignment"},
                             {"logical xor/not/xnor == pointwise image"},
                             {"logical and/nand/or/nor contains pointwise image"},
                             {"pz_compact and pz_simplify preserve the set"}};
  const std::vector<FactorId> private_a{1, 2, 3};
  const std::vector<FactorId> private_b{4, 5, 6};
  const std::vector<FactorId> shared{1, 2, 3, 4};

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t n = 1 + gen.below(4);

    const auto a = gen.poly(n, private_a);
    const auto b = gen.poly(n, private_b);
    const auto ea = pz_evaluate(a);
    const auto eb = pz_evaluate(b);
    tallies[0].record(pz_evaluate(pz_not(a)) == set_not(ea));
    for (auto gate : kBinaryGates) {
      tallies[0].record(pz_evaluate(pz_mink_apply(gate, a, b)) == set_minkowski(ea, eb, gate));
    }

    const auto x = gen.poly(n, shared);
    const auto y = gen.poly(n, shared);
    for (auto gate : kBinaryGates) {
      const auto z = pz_exact_apply(gate, x, y);
      bool ok = true;
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::map<FactorId, bool> alpha;
        for (std::size_t k = 0; k < shared.size(); ++k) alpha[shared[k]] = (mask >> k) & 1;
        ok = ok && point_at(z, alpha) == bv_op(point_at(x, alpha), point_at(y, alpha), gate);
      }
      tallies[1].record(ok);
    }

    const auto la = gen.logical(n);
    const auto lb = gen.logical(n);
    const auto sa = lz_evaluate(la);
    const auto sb = lz_evaluate(lb);
    tallies[2].record(lz_evaluate(lz_not(la)) == set_not(sa));
    for (auto gate : kBinaryGates) {
      const auto image = set_minkowski(sa, sb, gate);
      const auto got = lz_evaluate(lz_apply(gate, la, lb));
      if (gate == Gate::Xor || gate == Gate::Xnor) {
        tallies[2].record(got == image);
      } else {
        tallies[3].record(image.is_subset_of(got));
      }
    }

    tallies[4].record(pz_evaluate(pz_compact(x)) == pz_evaluate(x) &&
                      pz_evaluate(pz_simplify(x)) == pz_evaluate(x));
  }

  int failed = 0;
  for (const auto& t : tallies) {
    out << (t.failed == 0 ? "ok   " : "FAIL ") << t.name << " (" << t.checked - t.failed << '/'
        << t.checked << ")\n";
    if (t.failed != 0) ++failed;
  }
  return failed;
}

}  // namespace logizono::cli
