#include "tautring/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult) {
  std::vector<int> parts;
  for (const auto& [i, a] : mult) parts.insert(parts.end(), static_cast<std::size_t>(a), i);
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Integer Partition::aut() const {
  Integer a = 1;
  for (const auto& [i, k] : multiplicities()) a *= factorial(static_cast<unsigned>(k));
  return a;
}

Partition Partition::operator+(const Partition& o) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(parts));
}

std::optional<Partition> Partition::minus(const Partition& o) const {
  auto mine = multiplicities();
  for (const auto& [i, k] : o.multiplicities()) {
    auto it = mine.find(i);
    if (it == mine.end() || it->second < k) return std::nullopt;
    it->second -= k;
  }
  return from_multiplicities(mine);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed partition entry '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
  int a = size();
  int b = o.size();
  if (a != b) return a < b;
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(), parts_.begin(), parts_.end());
}

namespace {
void build(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    build(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  build(n, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_size, const std::function<bool(const Partition&)>& filter) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    for (auto& p : partitions_of(n)) {
      if (!filter || filter(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

bool no_part_two_mod_three(const Partition& p) {
  return std::none_of(p.parts().begin(), p.parts().end(), [](int k) { return k % 3 == 2; });
}

namespace {

Integer multiset_aut(const std::vector<Partition>& blocks) {
  Integer a = 1;
  std::size_t k = 0;
  while (k < blocks.size()) {
    std::size_t j = k;
    while (j < blocks.size() && blocks[j] == blocks[k]) ++j;
    a *= factorial(static_cast<unsigned>(j - k));
    k = j;
  }
  return a;
}

// Visits every set partition of {0..n-1} as a restricted growth string.
void set_partitions(std::size_t n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int blocks) {
    if (k == n) {
      visit(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[k] = b;
      rec(k + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

std::vector<Partition> blocks_of(const std::vector<int>& parts, const std::vector<int>& label, int nblocks,
                                 const std::vector<std::size_t>& positions) {
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(nblocks));
  for (std::size_t k = 0; k < positions.size(); ++k) {
    raw[static_cast<std::size_t>(label[k])].push_back(parts[positions[k]]);
  }
  std::vector<Partition> blocks;
  for (auto& r : raw) blocks.emplace_back(std::move(r));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Integer Division::block_aut() const { return multiset_aut(blocks); }
Integer MarkedDivision::block_aut() const { return multiset_aut(blocks); }

Integer m_formula(const Partition& sigma, const Partition& marked, const std::vector<Partition>& blocks) {
  Integer den = marked.aut() * multiset_aut(blocks);
  for (const auto& b : blocks) den *= b.aut();
  Integer num = sigma.aut();
  if (num % den != 0) throw std::logic_error("multiplicity is not an integer");
  return num / den;
}

Integer m_factor(const Partition& sigma, const Division& div) { return m_formula(sigma, Partition(), div.blocks); }

Integer m_factor(const Partition& sigma, const MarkedDivision& div) {
  return m_formula(sigma, div.marked, div.blocks);
}

Integer m_pm_factor(const MarkedDivision& div, int sign) {
  Integer m = div.m;
  if (div.marked.empty()) m *= (1 + sign);
  return m;
}

std::vector<Division> divisions(const Partition& sigma) {
  const auto& parts = sigma.parts();
  std::map<std::vector<Partition>, Integer> orbits;
  std::vector<std::size_t> positions(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) positions[k] = k;
  set_partitions(parts.size(), [&](const std::vector<int>& label, int nblocks) {
    ++orbits[blocks_of(parts, label, nblocks, positions)];
  });
  std::vector<Division> out;
  for (auto& [blocks, count] : orbits) {
    Integer m = m_formula(sigma, Partition(), blocks);
    if (m != count) throw std::logic_error("division multiplicity mismatch for " + sigma.to_string());
    out.push_back({blocks, m});
  }
  return out;
}

std::vector<MarkedDivision> marked_divisions(const Partition& sigma) {
  const auto& parts = sigma.parts();
  const std::size_t n = parts.size();
  std::map<std::pair<Partition, std::vector<Partition>>, Integer> orbits;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> marked;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) {
        marked.push_back(parts[k]);
      } else {
        rest.push_back(k);
      }
    }
    Partition star(marked);
    set_partitions(rest.size(), [&](const std::vector<int>& label, int nblocks) {
      ++orbits[{star, blocks_of(parts, label, nblocks, rest)}];
    });
  }
  std::vector<MarkedDivision> out;
  for (auto& [key, count] : orbits) {
    Integer m = m_formula(sigma, key.first, key.second);
    if (m != count) throw std::logic_error("marked division multiplicity mismatch for " + sigma.to_string());
    out.push_back({key.first, key.second, m});
  }
  return out;
}

}  // namespace tautring

namespace tautring {

ZMonomial::ZMonomial(std::map<std::pair<int, int>, int> mult) {
  for (const auto& [ij, a] : mult) {
    if (ij.first < 1 || ij.second < ij.first - 1) throw std::invalid_argument("z_{i,j} needs i >= 1, j >= i - 1");
    if (a < 0) throw std::invalid_argument("negative z exponent");
    if (a > 0) mult_.emplace(ij, a);
  }
}

int ZMonomial::ell() const {
  int s = 0;
  for (const auto& [ij, a] : mult_) s += ij.first * a;
  return s;
}

int ZMonomial::size() const {
  int s = 0;
  for (const auto& [ij, a] : mult_) s += ij.second * a;
  return s;
}

int ZMonomial::factors() const {
  int s = 0;
  for (const auto& [ij, a] : mult_) s += a;
  return s;
}

Integer ZMonomial::aut() const {
  Integer a = 1;
  for (const auto& [ij, k] : mult_) a *= factorial(static_cast<unsigned>(k));
  return a;
}

std::string ZMonomial::to_string() const {
  if (mult_.empty()) return "1";
  std::string out;
  for (const auto& [ij, a] : mult_) {
    out += "z_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}";
    if (a > 1) out += "^" + std::to_string(a);
  }
  return out;
}

ZMonomial ZMonomial::parse(const std::string& text) {
  std::map<std::pair<int, int>, int> mult;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("z factor must be i:j, got '" + item + "'");
    ++mult[{std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))}];
  }
  return ZMonomial(std::move(mult));
}

std::vector<ZMonomial> enumerate_zmonomials(int max_size, int max_factors) {
  // Admissible single factors with j <= max_size.
  std::vector<std::pair<int, int>> atoms;
  for (int j = 0; j <= max_size; ++j)
    for (int i = 1; i <= j + 1; ++i) atoms.emplace_back(i, j);
  std::vector<ZMonomial> out;
  std::map<std::pair<int, int>, int> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int size, int nf) {
    if (k == atoms.size()) {
      out.emplace_back(cur);
      return;
    }
    rec(k + 1, size, nf);
    const auto [i, j] = atoms[k];
    for (int a = 1; nf + a <= max_factors && size + a * j <= max_size; ++a) {
      cur[atoms[k]] = a;
      rec(k + 1, size + a * j, nf + a);
    }
    cur.erase(atoms[k]);
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end(), [](const ZMonomial& a, const ZMonomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.factors() != b.factors()) return a.factors() < b.factors();
    return a < b;
  });
  return out;
}

std::vector<Partition> sub_multisets(const Partition& sigma) {
  std::vector<Partition> out;
  auto mult = sigma.multiplicities();
  std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
  std::map<int, int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      Partition p = Partition::from_multiplicities(pick);
      if (!p.empty()) out.push_back(p);
      return;
    }
    for (int b = 0; b <= items[k].second; ++b) {
      if (b > 0) {
        pick[items[k].first] = b;
      } else {
        pick.erase(items[k].first);
      }
      rec(k + 1);
    }
    pick.erase(items[k].first);
  };
  rec(0);
  return out;
}

}  // namespace tautring
