#include "qcat/construction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcat {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(std::stoll(std::string(s)), 1);
  return Rational(std::stoll(std::string(s.substr(0, slash))),
                  std::stoll(std::string(s.substr(slash + 1))));
}

namespace {

// X on every qubit of every block selected by `pattern`.
PauliOperator x_on_blocks(const BlockLayout& layout, const gf2::BitVector& pattern) {
  PauliOperator p = PauliOperator::identity(layout.num_qubits());
  for (std::size_t j = 0; j < layout.n1; ++j) {
    if (!pattern.get(j)) continue;
    for (std::size_t k = 0; k < layout.d2; ++k) p.x.set(layout.qubit(j, k), true);
  }
  return p;
}

// Z on position 1 of every block selected by `pattern` (the lightest coset
// representative of the full-block form when d2 is odd).
PauliOperator z_on_block_leads(const BlockLayout& layout, const gf2::BitVector& pattern) {
  PauliOperator p = PauliOperator::identity(layout.num_qubits());
  for (std::size_t j = 0; j < layout.n1; ++j)
    if (pattern.get(j)) p.z.set(layout.qubit(j, 0), true);
  return p;
}

PauliOperator z_on_blocks(const BlockLayout& layout, const gf2::BitVector& pattern) {
  PauliOperator p = PauliOperator::identity(layout.num_qubits());
  for (std::size_t j = 0; j < layout.n1; ++j) {
    if (!pattern.get(j)) continue;
    for (std::size_t k = 0; k < layout.d2; ++k) p.z.set(layout.qubit(j, k), true);
  }
  return p;
}

}  // namespace

Construction construct_code(const ConstructionSpec& spec) {
  if (spec.d2 < 1) throw std::invalid_argument("construct_code: d2 must be >= 1");
  const classical::BlockCode& c1 = spec.c1;
  if (c1.k() < 1)
    throw std::invalid_argument("construct_code: C1 must have dimension >= 1");

  const BlockLayout layout{c1.n(), static_cast<std::size_t>(spec.d2)};
  const std::size_t n = layout.num_qubits();

  std::vector<std::string> warnings;
  if (spec.d2 % 2 == 0)
    warnings.push_back("d2 = " + std::to_string(spec.d2) +
                       " is even: majority vote is ambiguous; the stabilizer "
                       "is still well-defined");
  if (n > 32)
    warnings.push_back("n = " + std::to_string(n) +
                       " exceeds 32: exhaustive verification guards will refuse");

  std::vector<PauliOperator> gens;
  for (std::size_t m = 0; m < layout.n1; ++m) {
    for (std::size_t l = 1; l < layout.d2; ++l) {
      PauliOperator p = PauliOperator::identity(n);
      p.z.set(layout.qubit(m, 0), true);
      p.z.set(layout.qubit(m, l), true);
      gens.push_back(std::move(p));
    }
  }
  const std::size_t num_z_pairs = gens.size();

  const gf2::BitMatrix dual_rows = c1.dual_generator();
  for (const auto& g : dual_rows.rows()) gens.push_back(x_on_blocks(layout, g));

  // Closed-form logical candidates: the spin-flip of encoded qubit i acts as
  // Z on the blocks of generator row i (reduced to one Z per block when d2 is
  // odd; the full-block form is not coset-equivalent otherwise), the phase
  // shift as X on every qubit of those blocks.
  std::vector<LogicalPair> candidates;
  for (std::size_t i = 0; i < c1.k(); ++i) {
    const gf2::BitVector& f = c1.generator().row(i);
    PauliOperator x_bar = layout.d2 % 2 == 1 ? z_on_block_leads(layout, f)
                                             : z_on_blocks(layout, f);
    PauliOperator z_bar = x_on_blocks(layout, f);
    candidates.push_back(LogicalPair{std::move(x_bar), std::move(z_bar)});
  }

  StabilizerCode with_candidates(n, gens, candidates);
  const bool candidates_ok = validate(with_candidates).ok();
  StabilizerCode code = candidates_ok
                            ? std::move(with_candidates)
                            : StabilizerCode(n, gens, complete_logicals(n, gens));
  return Construction{std::move(code), c1,       layout,        dual_rows,
                      num_z_pairs,     candidates_ok, std::move(warnings)};
}

namespace {

// The dual of a rate-1 code is trivial and has no nonzero codewords; treat
// its distance as unbounded.
std::optional<int> dual_distance_if_any(const classical::BlockCode& c) {
  if (c.k() == c.n()) return std::nullopt;
  return c.dual_min_distance();
}

}  // namespace

ClaimedParameters claimed_parameters(const ConstructionSpec& spec) {
  if (spec.d2 < 1) throw std::invalid_argument("claimed_parameters: d2 must be >= 1");
  ClaimedParameters claimed;
  claimed.rate = Rational(static_cast<std::int64_t>(spec.c1.k()),
                          static_cast<std::int64_t>(spec.c1.n()) * spec.d2);
  const std::optional<int> d1_perp = dual_distance_if_any(spec.c1);
  claimed.distance = d1_perp ? std::min(*d1_perp, spec.d2) : spec.d2;
  return claimed;
}

VerificationReport verify(const ConstructionSpec& spec, std::optional<int> wmax) {
  Construction con = construct_code(spec);
  VerificationReport rep;
  rep.n = con.code.n();
  rep.k_computed = con.code.k();
  rep.d2 = spec.d2;
  rep.d1 = spec.c1.min_distance();
  rep.d1_perp = dual_distance_if_any(spec.c1);
  rep.paper_logicals_valid = con.paper_logicals_valid;
  rep.notes = con.warnings;

  const Diagnostics diag = validate(con.code);
  for (const auto& issue : diag.issues)
    rep.notes.push_back("validation: " + issue);

  const ClaimedParameters claimed = claimed_parameters(spec);
  rep.rate_claimed = claimed.rate;
  rep.rate_computed = Rational(static_cast<std::int64_t>(rep.k_computed),
                               static_cast<std::int64_t>(rep.n));
  rep.rate_match = rep.rate_claimed == rep.rate_computed;
  rep.d_claimed = claimed.distance;

  const int bound = wmax ? *wmax
                         : std::min<int>(static_cast<int>(rep.n), claimed.distance + 2);
  rep.d_computed = distance(con.code, bound);
  if (!rep.d_computed.exact())
    rep.notes.push_back("distance scan incomplete: no logical operator at weight <= " +
                        std::to_string(rep.d_computed.wmax_searched));
  rep.distance_match = rep.d_computed.exact() && *rep.d_computed.d == rep.d_claimed;

  rep.css = is_css(con.code);
  if (rep.css) {
    rep.d_css = distance_css(con.code);
    if (rep.d_computed.exact() && *rep.d_css != *rep.d_computed.d)
      rep.notes.push_back("oracle mismatch: distance_css = " + std::to_string(*rep.d_css) +
                          " but scan found " + std::to_string(*rep.d_computed.d));
  }

  // spin errors: no pure-X logical below weight d2
  const SweepTally x_sweep = sweep_errors(con.code, spec.d2 - 1, ErrorFilter::PureX);
  rep.spin_detection_holds = x_sweep.total(ErrorClass::Logical) == 0;

  // phase errors below min(d1_perp, d2): literal reading wants them all in
  // the stabilizer; the undetected reading only excludes logicals
  const int phase_bound = std::min(rep.d1_perp.value_or(rep.d2), rep.d2) - 1;
  const SweepTally z_sweep = sweep_errors(con.code, phase_bound, ErrorFilter::PureZ);
  rep.phase_literal_holds = z_sweep.total(ErrorClass::Logical) == 0 &&
                            z_sweep.total(ErrorClass::Detected) == 0;
  rep.phase_undetected_holds = z_sweep.total(ErrorClass::Logical) == 0;
  return rep;
}

ConvConstruction construct_conv(const classical::ConvolutionalCode& c1,
                                std::size_t frames, int d2) {
  classical::BlockCode terminated = classical::conv_terminate(c1, frames);
  const ConstructionSpec spec{terminated, d2};
  ConvConstruction out{construct_code(spec),
                       claimed_parameters(spec),
                       std::move(terminated),
                       classical::conv_free_distance(c1),
                       frames,
                       {}};
  out.notes.push_back("convolutional C1 '" + c1.name() + "' rate " +
                      std::to_string(c1.k()) + "/" + std::to_string(c1.n()) +
                      ", memory " + std::to_string(c1.memory()));
  out.notes.push_back("free distance " + out.free_distance.to_string() +
                      "; zero-tail termination over " + std::to_string(frames) +
                      " frames gives [" + std::to_string(out.terminated.n()) + "," +
                      std::to_string(out.terminated.k()) + "]");
  const std::optional<int> d1_perp = dual_distance_if_any(out.terminated);
  out.notes.push_back(
      d1_perp ? "claimed distance uses the terminated dual distance d1_perp = " +
                    std::to_string(*d1_perp)
              : "terminated code is rate 1: its dual is trivial, claimed distance is d2");
  return out;
}

}  // namespace qcat
