#include "diagwalk/verify.hpp"

#include <future>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "diagwalk/combinatorics.hpp"
#include "diagwalk/neps.hpp"

namespace diagwalk {

std::string RosterEntry::to_string() const {
  return std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(b);
}

std::vector<RosterEntry> default_roster() { return {{3, 1, 2}, {5, 1, 2}, {7, 1, 2}, {2, 2, 3}, {3, 2, 2}}; }

std::vector<RosterEntry> parse_roster(const std::string& literal) {
  std::vector<RosterEntry> out;
  std::stringstream in(literal);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto values = parse_coefficients(item);
    if (values.size() != 3) throw Error(Errc::ParseError, "roster entries are p,a,b triples: '" + item + "'");
    out.push_back({values[0], values[1], values[2]});
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty roster");
  return out;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const SuiteResult* VerifyReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

namespace {

SuiteResult make_suite(std::string suite, std::string scope) {
  SuiteResult result;
  result.suite = std::move(suite);
  result.scope = std::move(scope);
  return result;
}

void fail(SuiteResult& result, const std::string& detail) {
  if (result.passed) result.counterexample = detail;
  result.passed = false;
}

std::vector<SuiteResult> roster_suites(const RosterEntry& entry, const VerifyOptions& options, bool inject) {
  const std::string scope = entry.to_string();
  SuiteResult triple = make_suite("triple-agreement", scope);
  SuiteResult bridge = make_suite("walk-bridge", scope);
  SuiteResult partition = make_suite("partition", scope);
  SuiteResult iso = make_suite("isomorphism", scope);

  try {
    const DiagonalSystem sys(entry.p, entry.a, entry.b);
    const FiniteField& field = sys.field();
    const std::uint32_t q = field.order();
    const DenseGraph gp = gp_graph(field, sys.k());
    auto describe = [&](unsigned r, std::uint32_t alpha) {
      std::ostringstream out;
      out << "p=" << entry.p << " a=" << entry.a << " b=" << entry.b << " k=" << sys.k() << " r=" << r
          << " alpha=" << field.to_string(field.element(alpha));
      return out.str();
    };

    for (unsigned r = 0; r <= options.max_r; ++r) {
      std::vector<SolutionCount> formula(q);
      for (std::uint32_t x = 0; x < q; ++x) formula[x] = sys.count_nonzero_formula(field.element(x), r);
      if (inject && r == options.max_r) formula[q - 1] += 1;

      const auto conv = convolution_counts(field, sys.k(), r, true);
      std::vector<SolutionCount> brute;
      try {
        brute = brute_force_histogram(field, sys.k(), r, true, options.enumeration_cap);
      } catch (const Error& e) {
        if (e.code() != Errc::EnumerationTooLarge) throw;
        triple.skipped += q;
      }
      const auto walks = walk_solution_counts(gp, sys.k(), field.zero(), r);

      SolutionCount total = 0;
      for (std::uint32_t x = 0; x < q; ++x) {
        ++triple.checks;
        const bool brute_ok = brute.empty() || brute[x] == formula[x];
        if (!brute_ok || conv[x] != formula[x])
          fail(triple, describe(r, x) + " formula=" + to_decimal(formula[x]) +
                           " brute=" + (brute.empty() ? std::string("skipped") : to_decimal(brute[x])) +
                           " convolution=" + to_decimal(conv[x]));
        ++bridge.checks;
        if (walks[x] != formula[x])
          fail(bridge, describe(r, x) + " formula=" + to_decimal(formula[x]) + " k^r*walks=" + to_decimal(walks[x]));
        total += formula[x];
      }
      ++partition.checks;
      const BigInt expected_nonzero = ipow(BigInt(q - 1), r);
      if (total != expected_nonzero)
        fail(partition, "p=" + scope + " r=" + std::to_string(r) + " sum N_r=" + to_decimal(total) +
                            " expected " + to_decimal(expected_nonzero));

      SolutionCount all_total = 0;
      for (std::uint32_t x = 0; x < q; ++x) all_total += sys.count_all_formula(field.element(x), r);
      ++partition.checks;
      const BigInt expected_all = ipow(BigInt(q), r);
      if (all_total != expected_all)
        fail(partition, "p=" + scope + " s=" + std::to_string(r) + " sum M_s=" + to_decimal(all_total) +
                            " expected " + to_decimal(expected_all));
    }

    ++iso.checks;
    if (!verify_isomorphism(sys.view()))
      fail(iso, "coordinate map is not an isomorphism onto H(" + std::to_string(entry.b) + ", " +
                    std::to_string(sys.view().alphabet()) + ")");
  } catch (const Error& e) {
    for (auto* s : {&triple, &bridge, &partition, &iso}) fail(*s, std::string("error: ") + e.what());
  }
  return {triple, bridge, partition, iso};
}

DenseGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  const bool directed = coin(rng);
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      const std::uint8_t v = coin(rng) ? 1 : 0;
      adj[i * n + j] = v;
      if (!directed) adj[j * n + i] = v;
    }
  return DenseGraph(n, std::move(adj), directed);
}

NepsBasis random_basis(std::mt19937_64& rng, std::size_t arity) {
  const std::uint32_t nonzero = (1u << arity) - 1;
  std::uniform_int_distribution<std::uint32_t> subset(1, (1u << nonzero) - 1);
  const std::uint32_t mask = subset(rng);
  std::vector<NepsBasis::Tuple> tuples;
  for (std::uint32_t code = 1; code <= nonzero; ++code) {
    if (!(mask >> (code - 1) & 1u)) continue;
    NepsBasis::Tuple t(arity);
    for (std::size_t i = 0; i < arity; ++i) t[i] = (code >> (arity - 1 - i)) & 1u;
    tuples.push_back(std::move(t));
  }
  return NepsBasis(arity, std::move(tuples));
}

SuiteResult neps_oracle_suite(const VerifyOptions& options) {
  SuiteResult result = make_suite("neps-oracle", std::to_string(options.neps_instances) + " random instances");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> arity_dist(1, 3);
  std::uniform_int_distribution<std::size_t> size_dist(1, 5);
  std::uniform_int_distribution<unsigned> length_dist(0, 5);
  for (unsigned instance = 0; instance < options.neps_instances; ++instance) {
    const std::size_t arity = arity_dist(rng);
    std::vector<DenseGraph> factors;
    for (std::size_t t = 0; t < arity; ++t) factors.push_back(random_graph(rng, size_dist(rng)));
    const NepsBasis basis = random_basis(rng, arity);
    const unsigned r = length_dist(rng);
    const DenseGraph product = neps_construct(factors, basis);
    const BigMatrix power = adjacency_power(product, r);
    for (std::size_t i = 0; i < product.order(); ++i)
      for (std::size_t j = 0; j < product.order(); ++j) {
        ++result.checks;
        const WalkCount formula = neps_walks_between(factors, basis, r, i, j);
        if (formula != power[i][j])
          fail(result, "instance " + std::to_string(instance) + " basis=" + basis.to_string() + " r=" +
                           std::to_string(r) + " (" + std::to_string(i) + "," + std::to_string(j) +
                           ") formula=" + to_decimal(formula) + " matrix=" + to_decimal(power[i][j]));
      }
  }
  return result;
}

SuiteResult k3k4_suite() {
  using Rational = boost::multiprecision::cpp_rational;
  SuiteResult result = make_suite("k3-k4-closed-forms", "r=1..8");
  const std::vector<DenseGraph> factors{complete_graph(3), complete_graph(4)};
  const DenseGraph kron = neps_construct(factors, NepsBasis::parse("11"));
  const DenseGraph sum = neps_construct(factors, NepsBasis::parse("10;01"));
  const auto kron_rows = walk_rows(kron, 8, 0);
  const auto sum_rows = walk_rows(sum, 8, 0);
  // x^e for any integer e, in exact rationals.
  auto rpow = [](long base, int e) {
    Rational value = 1;
    for (int i = 0; i < std::abs(e); ++i) value *= base;
    return e < 0 ? Rational(1) / value : value;
  };
  for (int r = 1; r <= 8; ++r) {
    ++result.checks;
    const BigInt closed = (ipow(6, r - 1) + (r % 2 == 0 ? 1 : -1) * (ipow(2, r - 1) + ipow(3, r - 1)) + 1) / 2;
    if (closed != kron_rows[r][0])
      fail(result, "Kronecker r=" + std::to_string(r) + " closed=" + to_decimal(closed) +
                       " matrix=" + to_decimal(kron_rows[r][0]));
    ++result.checks;
    Rational displayed = 0;
    for (int l = 0; l <= r; ++l)
      displayed += Rational(binomial(r, l)) * Rational(1, 2) * (rpow(2, l - 1) - rpow(-1, l - 1)) *
                   (rpow(3, r - l - 1) - rpow(-1, r - l - 1));
    if (displayed != Rational(sum_rows[r][0]))
      fail(result, "cartesian r=" + std::to_string(r) + " sum=" + displayed.str() +
                       " matrix=" + to_decimal(sum_rows[r][0]));
  }
  return result;
}

SuiteResult hamming_suite() {
  SuiteResult result = make_suite("hamming-identities", "H(2,3) H(2,5) H(3,4), r<=6");
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> graphs{{2, 3}, {2, 5}, {3, 4}};
  constexpr unsigned kMaxLength = 6;
  for (auto [b, q] : graphs) {
    const std::vector<DenseGraph> factors(b, complete_graph(q));
    const NepsBasis standard = NepsBasis::standard(b);
    const DenseGraph h = neps_construct(factors, standard);
    const std::vector<std::size_t> sizes(b, q);
    const std::vector<std::uint64_t> msizes(b, q);
    const std::vector<WalkTable> tables(b, complete_walk_table(q, kMaxLength));
    const auto rows = walk_rows(h, kMaxLength, 0);
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
      AgreementPattern agree(b);
      std::vector<std::size_t> target(b, 0);
      for (std::uint32_t t = 0; t < b; ++t) {
        agree[t] = (mask >> t & 1u) != 0;
        target[t] = agree[t] ? 0 : 1;
      }
      const std::size_t vj = product_index(sizes, target);
      for (unsigned r = 0; r <= kMaxLength; ++r) {
        ++result.checks;
        const WalkCount hw = hamming_walks(b, q, r, agree);
        const WalkCount cs = cartesian_sum_walks(tables, r, agree);
        const WalkCount nc = neps_complete_walks(msizes, standard, r, agree);
        const WalkCount mp = rows[r][vj];
        if (hw != cs || cs != nc || nc != mp)
          fail(result, "H(" + std::to_string(b) + "," + std::to_string(q) + ") r=" + std::to_string(r) +
                           " mask=" + std::to_string(mask) + " hamming=" + to_decimal(hw) +
                           " cartesian=" + to_decimal(cs) + " neps=" + to_decimal(nc) + " matrix=" + to_decimal(mp));
      }
    }
  }
  return result;
}

SuiteResult divisibility_suite() {
  SuiteResult result = make_suite("divisibility-soundness", "p<=13, a<=3, b<=12");
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t a = 1; a <= 3; ++a)
      for (std::uint32_t b = 1; b <= 12; ++b) {
        ++result.checks;
        const auto report = remark_cases(p, a, b);
        const bool by_quotient = k_is_integer_by_quotient(p, a, b);
        if ((!report.cases.empty() && !report.k_integer) || by_quotient != report.k_integer)
          fail(result, "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " cases=" + format_cases(report.cases) + " k_integer=" + (report.k_integer ? "1" : "0"));
      }
  return result;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<std::future<std::vector<SuiteResult>>> pending;
  for (std::size_t i = 0; i < options.roster.size(); ++i) {
    const bool inject = options.inject_fault && i == 0;
    pending.push_back(std::async(std::launch::async, roster_suites, options.roster[i], std::cref(options), inject));
  }
  auto neps = std::async(std::launch::async, neps_oracle_suite, std::cref(options));

  VerifyReport report;
  // Collected in roster order so the output does not depend on scheduling.
  for (auto& f : pending)
    for (auto& r : f.get()) report.results.push_back(std::move(r));
  report.results.push_back(neps.get());
  report.results.push_back(k3k4_suite());
  report.results.push_back(hamming_suite());
  report.results.push_back(divisibility_suite());
  return report;
}

}  // namespace diagwalk
