#include "qcat/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat {

const char* to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::Identity: return "identity";
    case ErrorClass::InStabilizer: return "in_stabilizer";
    case ErrorClass::Detected: return "detected";
    case ErrorClass::Logical: return "logical";
  }
  return "?";
}

StabilizerCode::StabilizerCode(std::size_t n, std::vector<PauliOperator> gens,
                               std::vector<LogicalPair> logicals)
    : basis_(n, std::move(gens)), logicals_(std::move(logicals)) {
  for (const auto& pair : logicals_) {
    if (pair.x_bar.num_qubits() != n || pair.z_bar.num_qubits() != n)
      throw std::invalid_argument("StabilizerCode: logical operator size mismatch");
  }
}

StabilizerCode StabilizerCode::with_logicals(std::vector<LogicalPair> logicals) const {
  return StabilizerCode(n(), generators(), std::move(logicals));
}

Diagnostics validate(const StabilizerCode& code) {
  Diagnostics diag;
  const auto& gens = code.generators();
  diag.rank = code.rank();
  diag.k = code.k();

  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j]))
        diag.issues.push_back("generators " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " anticommute");

  if (diag.rank < gens.size())
    diag.issues.push_back("dependent generators: rank " + std::to_string(diag.rank) +
                          " < " + std::to_string(gens.size()) + " rows");

  const auto& logicals = code.logicals();
  if (logicals.empty()) return diag;

  if (logicals.size() != diag.k)
    diag.issues.push_back("logical pair count " + std::to_string(logicals.size()) +
                          " != k = " + std::to_string(diag.k));

  for (std::size_t i = 0; i < logicals.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!commutes(logicals[i].x_bar, gens[g]))
        diag.issues.push_back("Xbar" + std::to_string(i + 1) +
                              " anticommutes with generator " + std::to_string(g + 1));
      if (!commutes(logicals[i].z_bar, gens[g]))
        diag.issues.push_back("Zbar" + std::to_string(i + 1) +
                              " anticommutes with generator " + std::to_string(g + 1));
    }
    for (std::size_t j = 0; j < logicals.size(); ++j) {
      const bool want_commute = i != j;
      if (commutes(logicals[i].x_bar, logicals[j].z_bar) != want_commute)
        diag.issues.push_back("Xbar" + std::to_string(i + 1) + " vs Zbar" +
                              std::to_string(j + 1) + ": wrong commutation");
      if (j > i) {
        if (!commutes(logicals[i].x_bar, logicals[j].x_bar))
          diag.issues.push_back("Xbar" + std::to_string(i + 1) + " vs Xbar" +
                                std::to_string(j + 1) + " anticommute");
        if (!commutes(logicals[i].z_bar, logicals[j].z_bar))
          diag.issues.push_back("Zbar" + std::to_string(i + 1) + " vs Zbar" +
                                std::to_string(j + 1) + " anticommute");
      }
    }
  }

  // independence from the stabilizer and from each other
  gf2::RowSpan acc(2 * code.n());
  for (const auto& g : gens) acc.add(g.to_symplectic());
  for (std::size_t i = 0; i < logicals.size(); ++i) {
    if (!acc.add(logicals[i].x_bar.to_symplectic()))
      diag.issues.push_back("Xbar" + std::to_string(i + 1) +
                            " lies in the span of the generators and prior logicals");
    if (!acc.add(logicals[i].z_bar.to_symplectic()))
      diag.issues.push_back("Zbar" + std::to_string(i + 1) +
                            " lies in the span of the generators and prior logicals");
  }
  return diag;
}

namespace {

// Symplectic inner product of two (x|z) rows.
bool sympl(const gf2::BitVector& a, const gf2::BitVector& b) {
  const std::size_t n = a.size() / 2;
  const gf2::BitVector ax = a.slice(0, n), az = a.slice(n, n);
  const gf2::BitVector bx = b.slice(0, n), bz = b.slice(n, n);
  return ax.dot(bz) ^ az.dot(bx);
}

}  // namespace

std::vector<LogicalPair> complete_logicals(std::size_t n,
                                           const std::vector<PauliOperator>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j]))
        throw std::invalid_argument("complete_logicals: generators anticommute");

  gf2::BitMatrix stab(0, 2 * n);
  for (const auto& g : gens) stab.append_row(g.to_symplectic());
  if (gf2::rank(stab) != gens.size())
    throw std::invalid_argument("complete_logicals: dependent generators");

  // N(S) as a vector space: kernel of the half-swapped generator matrix.
  gf2::BitMatrix swapped(0, 2 * n);
  for (const auto& g : gens)
    swapped.append_row(gf2::BitVector::concat(g.z, g.x));
  gf2::BitMatrix normalizer = gf2::nullspace(swapped);

  std::vector<gf2::BitVector> pool(normalizer.rows().begin(), normalizer.rows().end());
  gf2::RowSpan acc(2 * n);
  for (const auto& r : stab.rows()) acc.add(r);

  std::vector<LogicalPair> pairs;
  const std::size_t k = n - gens.size();
  while (pairs.size() < k) {
    // first pool vector outside the accumulated span; the pool is kept
    // commuting with all previously chosen pairs
    std::size_t vi = 0;
    while (vi < pool.size() && acc.contains(pool[vi])) ++vi;
    if (vi == pool.size())
      throw std::logic_error("complete_logicals: ran out of candidates");
    const gf2::BitVector v = pool[vi];

    // symplectic partner
    std::size_t wi = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == vi) continue;
      if (sympl(v, pool[j])) {
        wi = j;
        break;
      }
    }
    if (wi == pool.size())
      throw std::logic_error("complete_logicals: no anticommuting partner found");
    const gf2::BitVector w = pool[wi];

    // make the rest of the pool commute with the chosen pair
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == vi || j == wi) continue;
      auto& u = pool[j];
      const bool su_w = sympl(u, w), su_v = sympl(u, v);
      if (su_w) u ^= v;
      if (su_v) u ^= w;
    }

    acc.add(v);
    acc.add(w);
    pairs.push_back(LogicalPair{PauliOperator::from_symplectic(v),
                                PauliOperator::from_symplectic(w)});
  }
  return pairs;
}

ErrorClass classify_error(const StabilizerCode& code, const PauliOperator& p) {
  if (p.num_qubits() != code.n())
    throw std::invalid_argument("classify_error: qubit count mismatch");
  if (p.is_identity()) return ErrorClass::Identity;
  if (!code.stabilizer().in_normalizer(p)) return ErrorClass::Detected;
  if (code.stabilizer().contains(p)) return ErrorClass::InStabilizer;
  return ErrorClass::Logical;
}

double scan_volume(std::size_t n, int wmax, ErrorFilter filter) {
  double volume = 0;
  double binom = 1;  // C(n, 0)
  double letters = 1;
  for (int w = 1; w <= wmax && w <= static_cast<int>(n); ++w) {
    binom = binom * static_cast<double>(n - w + 1) / w;
    letters *= filter == ErrorFilter::All ? 3.0 : 1.0;
    volume += binom * letters;
  }
  return volume;
}

namespace {

void check_scan_volume(std::size_t n, int wmax, ErrorFilter filter, const char* what) {
  const double vol = scan_volume(n, wmax, filter);
  if (vol > kScanVolumeLimit)
    throw GuardError(std::string(what) + ": search volume ~" + std::to_string(vol) +
                     " exceeds limit " + std::to_string(kScanVolumeLimit));
}

// Ascending-weight scan over all Paulis of weight 1..wmax matching the filter.
// Supports iterate lexicographically; letter assignments count up with X<Y<Z
// and the first support qubit as the most significant digit. Visit returns
// true to stop.
template <typename Visit>
void scan_paulis(std::size_t n, int wmax, ErrorFilter filter, Visit&& visit) {
  PauliOperator p = PauliOperator::identity(n);
  for (int w = 1; w <= wmax && w <= static_cast<int>(n); ++w) {
    std::vector<std::size_t> support(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    const char fixed_letter = filter == ErrorFilter::PureX ? 'X' : 'Z';
    while (true) {
      if (filter == ErrorFilter::All) {
        std::vector<int> digits(static_cast<std::size_t>(w), 0);
        static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
        while (true) {
          for (int i = 0; i < w; ++i)
            p.set_letter(support[static_cast<std::size_t>(i)],
                         kLetters[digits[static_cast<std::size_t>(i)]]);
          const bool stop = visit(p, w);
          for (int i = 0; i < w; ++i)
            p.set_letter(support[static_cast<std::size_t>(i)], 'I');
          if (stop) return;
          int pos = w - 1;
          while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 2) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++digits[static_cast<std::size_t>(pos)];
        }
      } else {
        for (int i = 0; i < w; ++i)
          p.set_letter(support[static_cast<std::size_t>(i)], fixed_letter);
        const bool stop = visit(p, w);
        for (int i = 0; i < w; ++i)
          p.set_letter(support[static_cast<std::size_t>(i)], 'I');
        if (stop) return;
      }
      // next support combination
      int pos = w - 1;
      while (pos >= 0 &&
             support[static_cast<std::size_t>(pos)] == n - static_cast<std::size_t>(w - pos))
        --pos;
      if (pos < 0) break;
      ++support[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < w; ++i)
        support[static_cast<std::size_t>(i)] = support[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace

std::string DistanceResult::to_string() const {
  if (d) {
    std::string s = "d = " + std::to_string(*d) + " (exact)";
    if (witness) s += ", witness " + witness->to_indexed();
    return s;
  }
  return "d >= " + std::to_string(wmax_searched + 1) +
         " (no logical operator at weight <= " + std::to_string(wmax_searched) + ")";
}

DistanceResult distance(const StabilizerCode& code, int wmax) {
  const int bound = std::min<int>(wmax, static_cast<int>(code.n()));
  check_scan_volume(code.n(), bound, ErrorFilter::All, "distance");
  DistanceResult result;
  result.wmax_searched = std::max(bound, 0);
  scan_paulis(code.n(), bound, ErrorFilter::All, [&](const PauliOperator& p, int w) {
    if (classify_error(code, p) != ErrorClass::Logical) return false;
    result.d = w;
    result.wmax_searched = w;
    result.witness = p;
    return true;
  });
  return result;
}

CssSplit css_split(const StabilizerCode& code) {
  CssSplit split;
  const auto& gens = code.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const bool has_x = gens[i].x.any(), has_z = gens[i].z.any();
    if (has_x && has_z)
      throw NotCssError("generator " + std::to_string(i + 1) + " (" +
                        gens[i].to_compact() + ") mixes X and Z support");
    if (has_x)
      split.x_gens.push_back(gens[i]);
    else if (has_z)
      split.z_gens.push_back(gens[i]);
  }
  return split;
}

bool is_css(const StabilizerCode& code) {
  for (const auto& g : code.generators())
    if (g.x.any() && g.z.any()) return false;
  return true;
}

namespace {

// Minimum weight over span(kernel of `checks`) \ rowspan(`excluded`).
std::optional<int> min_weight_outside(const gf2::BitMatrix& checks,
                                      const gf2::BitMatrix& excluded) {
  const gf2::BitMatrix kernel = gf2::nullspace(checks);
  gf2::RowSpan excl(excluded);
  std::optional<std::size_t> best;
  gf2::for_each_in_span(kernel, [&](const gf2::BitVector& v) {
    if (v.none()) return;
    const std::size_t w = v.weight();
    if (best && w >= *best) return;
    if (excl.contains(v)) return;
    best = w;
  });
  if (!best) return std::nullopt;
  return static_cast<int>(*best);
}

}  // namespace

int distance_css(const StabilizerCode& code) {
  const CssSplit split = css_split(code);
  const std::size_t n = code.n();
  gf2::BitMatrix sx(0, n), sz(0, n);
  for (const auto& g : split.x_gens) sx.append_row(g.x);
  for (const auto& g : split.z_gens) sz.append_row(g.z);

  // pure-Z candidates commute with every X generator; pure-X symmetrically
  const std::optional<int> z_min = min_weight_outside(sx, sz);
  const std::optional<int> x_min = min_weight_outside(sz, sx);
  if (!z_min && !x_min)
    throw std::logic_error("distance_css: no pure-type logical operators (k = 0?)");
  if (!z_min) return *x_min;
  if (!x_min) return *z_min;
  return std::min(*z_min, *x_min);
}

std::uint64_t SweepTally::total(ErrorClass c) const {
  std::uint64_t t = 0;
  for (const auto& row : counts) t += row[static_cast<std::size_t>(c)];
  return t;
}

SweepTally sweep_errors(const StabilizerCode& code, int wmax, ErrorFilter filter) {
  const int bound = std::min<int>(wmax, static_cast<int>(code.n()));
  check_scan_volume(code.n(), bound, filter, "sweep_errors");
  SweepTally tally;
  tally.counts.assign(static_cast<std::size_t>(std::max(bound, 0)) + 1, {0, 0, 0, 0});
  tally.counts[0][static_cast<std::size_t>(ErrorClass::Identity)] = 1;
  scan_paulis(code.n(), bound, filter, [&](const PauliOperator& p, int w) {
    const ErrorClass c = classify_error(code, p);
    ++tally.counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
    return false;
  });
  return tally;
}

}  // namespace qcat
