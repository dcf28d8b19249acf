#include "qcat/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace qcat {

namespace {

void check_qubits(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

PauliOperator::PauliOperator(gf2::BitVector x_, gf2::BitVector z_)
    : x(std::move(x_)), z(std::move(z_)) {
  check_qubits(x.size(), z.size(), "PauliOperator");
}

PauliOperator PauliOperator::identity(std::size_t n) {
  return PauliOperator(gf2::BitVector(n), gf2::BitVector(n));
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
  PauliOperator p = identity(n);
  p.set_letter(qubit, letter);
  return p;
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  const auto xs = x.words(), zs = z.words();
  for (std::size_t i = 0; i < xs.size(); ++i)
    w += static_cast<std::size_t>(std::popcount(xs[i] | zs[i]));
  return w;
}

char PauliOperator::letter(std::size_t i) const {
  const bool xi = x.get(i), zi = z.get(i);
  if (xi && zi) return 'Y';
  if (xi) return 'X';
  if (zi) return 'Z';
  return 'I';
}

void PauliOperator::set_letter(std::size_t i, char letter) {
  switch (letter) {
    case 'I': x.set(i, false); z.set(i, false); break;
    case 'X': x.set(i, true);  z.set(i, false); break;
    case 'Y': x.set(i, true);  z.set(i, true);  break;
    case 'Z': x.set(i, false); z.set(i, true);  break;
    default:
      throw std::invalid_argument("PauliOperator: unknown letter '" +
                                  std::string(1, letter) + "'");
  }
}

std::string PauliOperator::to_compact() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t i = 0; i < num_qubits(); ++i) s[i] = letter(i);
  return s;
}

std::string PauliOperator::to_indexed() const {
  std::string s;
  for (std::size_t i = 0; i < num_qubits(); ++i) {
    const char c = letter(i);
    if (c == 'I') continue;
    if (!s.empty()) s += ' ';
    s += c;
    s += std::to_string(i + 1);
  }
  return s.empty() ? "I" : s;
}

PauliOperator PauliOperator::from_compact(std::string_view s) {
  PauliOperator p = identity(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p.set_letter(i, s[i]);
  return p;
}

PauliOperator PauliOperator::from_indexed(std::string_view s, std::size_t n) {
  PauliOperator p = identity(n);
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    const char letter = s[i++];
    if (letter == 'I' && (i == s.size() || std::isspace(static_cast<unsigned char>(s[i]))))
      continue;  // bare identity token
    if (letter != 'X' && letter != 'Y' && letter != 'Z')
      throw std::invalid_argument("Pauli parse: unexpected letter '" +
                                  std::string(1, letter) + "'");
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("Pauli parse: missing qubit index");
    const unsigned long idx = std::stoul(std::string(s.substr(start, i - start)));
    if (idx < 1 || idx > n)
      throw std::invalid_argument("Pauli parse: qubit index " + std::to_string(idx) +
                                  " out of range 1.." + std::to_string(n));
    // tokens multiply
    const std::size_t q = idx - 1;
    PauliOperator t = single(n, q, letter);
    p = p * t;
  }
  return p;
}

PauliOperator PauliOperator::parse(std::string_view s, std::optional<std::size_t> n) {
  bool compact = !s.empty();
  for (char c : s)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') compact = false;
  if (compact) {
    if (n && *n != s.size())
      throw std::invalid_argument("Pauli parse: compact string length " +
                                  std::to_string(s.size()) + " != n " + std::to_string(*n));
    return from_compact(s);
  }
  if (!n)
    throw std::invalid_argument("Pauli parse: indexed form needs the qubit count");
  return from_indexed(s, *n);
}

gf2::BitVector PauliOperator::to_symplectic() const {
  return gf2::BitVector::concat(x, z);
}

PauliOperator PauliOperator::from_symplectic(const gf2::BitVector& row) {
  if (row.size() % 2 != 0)
    throw std::invalid_argument("from_symplectic: odd row length");
  const std::size_t n = row.size() / 2;
  return PauliOperator(row.slice(0, n), row.slice(n, n));
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  check_qubits(a.num_qubits(), b.num_qubits(), "PauliOperator::operator*");
  return PauliOperator(a.x ^ b.x, a.z ^ b.z);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  check_qubits(a.num_qubits(), b.num_qubits(), "commutes");
  return !(a.x.dot(b.z) ^ a.z.dot(b.x));
}

PauliGroupBasis::PauliGroupBasis(std::size_t n, std::vector<PauliOperator> gens)
    : n_(n), gens_(std::move(gens)), mat_(0, 2 * n), span_(2 * n) {
  for (const auto& g : gens_) {
    check_qubits(g.num_qubits(), n_, "PauliGroupBasis");
    mat_.append_row(g.to_symplectic());
  }
  for (const auto& r : mat_.rows()) span_.add(r);
}

bool PauliGroupBasis::contains(const PauliOperator& p) const {
  check_qubits(p.num_qubits(), n_, "PauliGroupBasis::contains");
  return span_.contains(p.to_symplectic());
}

bool PauliGroupBasis::in_normalizer(const PauliOperator& p) const {
  check_qubits(p.num_qubits(), n_, "PauliGroupBasis::in_normalizer");
  for (const auto& g : gens_)
    if (!commutes(p, g)) return false;
  return true;
}

}  // namespace qcat
