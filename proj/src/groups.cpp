#include "powerclass/groups.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace powerclass {

namespace {

std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

void validate_table(const std::vector<std::vector<Element>>& t) {
  const std::size_t n = t.size();
  if (n == 0) throw GroupError("group table is empty");
  for (std::size_t g = 0; g < n; ++g) {
    if (t[g].size() != n) throw GroupError("group table row " + std::to_string(g) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (Element h : t[g]) {
      if (h >= n) throw GroupError("group table entry out of range in row " + std::to_string(g));
      if (seen[h]) throw GroupError("group table row " + std::to_string(g) + " is not a permutation");
      seen[h] = true;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<bool> seen(n, false);
    for (std::size_t g = 0; g < n; ++g) {
      if (seen[t[g][h]]) throw GroupError("group table column " + std::to_string(h) + " is not a permutation");
      seen[t[g][h]] = true;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (t[0][g] != g || t[g][0] != g) throw GroupError("element 0 is not a two-sided identity");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw GroupError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
}

DynBitset powers_of(const std::vector<std::vector<Element>>& table, Element g) {
  DynBitset bits(table.size());
  Element x = 0;
  do {
    bits.set(x);
    x = table[x][g];
  } while (x != 0);
  return bits;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw GroupError("malformed group spec '" + std::string(spec) + "': expected an integer");
  return value;
}

std::vector<std::string> split_factors(std::string_view body, std::string_view spec) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && --depth < 0) throw GroupError("unbalanced parentheses in '" + std::string(spec) + "'");
    if (body[i] == ',' && depth == 0) {
      parts.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw GroupError("unbalanced parentheses in '" + std::string(spec) + "'");
  parts.push_back(trim(body.substr(start)));
  for (auto& p : parts) {
    if (p.empty()) throw GroupError("empty product factor in '" + std::string(spec) + "'");
    if (p.front() == '(' && p.back() == ')') p = trim(std::string_view(p).substr(1, p.size() - 2));
  }
  return parts;
}

}  // namespace

std::vector<DynBitset> cyclic_subgroups_serial(const std::vector<std::vector<Element>>& table) {
  std::vector<DynBitset> out;
  out.reserve(table.size());
  for (Element g = 0; g < table.size(); ++g) out.push_back(powers_of(table, g));
  return out;
}

std::vector<DynBitset> cyclic_subgroups_parallel(const std::vector<std::vector<Element>>& table) {
  const auto n = static_cast<std::int64_t>(table.size());
  std::vector<DynBitset> out(table.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < n; ++g) out[static_cast<std::size_t>(g)] = powers_of(table, static_cast<Element>(g));
  return out;
}

Group Group::from_table(std::vector<std::vector<Element>> table, std::string label,
                        std::vector<std::string> names) {
  validate_table(table);
  Group g;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.cyclic_ = cyclic_subgroups_parallel(g.table_);
  g.orders_.reserve(g.order());
  for (const auto& c : g.cyclic_) g.orders_.push_back(c.count());
  if (names.size() == g.order()) {
    g.names_ = std::move(names);
  } else {
    g.names_.clear();
    for (std::size_t i = 0; i < g.order(); ++i) g.names_.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  }
  return g;
}

void Group::check_index(Element g) const {
  if (g >= order()) throw std::out_of_range("element index " + std::to_string(g) + " out of range");
}

Element Group::inverse(Element g) const {
  check_index(g);
  for (Element h = 0; h < order(); ++h)
    if (table_[g][h] == 0) return h;
  throw GroupError("element without inverse");  // unreachable for a validated table
}

Element Group::power(Element g, std::uint64_t k) const {
  check_index(g);
  Element x = 0;
  for (std::uint64_t i = 0; i < k % orders_[g]; ++i) x = table_[x][g];
  return x;
}

std::size_t Group::element_order(Element g) const {
  check_index(g);
  return orders_[g];
}

bool Group::is_power_of(Element a, Element b) const {
  check_index(a);
  check_index(b);
  return cyclic_[b].test(a);
}

Group make_cyclic(std::size_t n) {
  if (n < 1) throw GroupError("cyclic:n requires n >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    names[i] = i == 0 ? "e" : power_name("c", i);
  }
  return Group::from_table(std::move(t), "cyclic:" + std::to_string(n), std::move(names));
}

Group make_dihedral(std::size_t n) {
  if (n < 3) throw GroupError("dihedral:n requires n >= 3");
  // r^i s^j at index i + n*j; s r = r^-1 s.
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, j = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, l = y / n;
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      t[x][y] = rot + n * ((j + l) % 2);
    }
    std::string name = power_name("r", i) + (j ? "s" : "");
    names[x] = name.empty() ? "e" : name;
  }
  return Group::from_table(std::move(t), "dihedral:" + std::to_string(n), std::move(names));
}

Group make_quaternion(std::size_t m) {
  if (m < 2) throw GroupError("quaternion:m requires m >= 2");
  // a^i x^j at index i + 2m*j; a^{2m} = e, x^2 = a^m, x a x^-1 = a^-1.
  const std::size_t half = 2 * m, order = 4 * m;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t p = 0; p < order; ++p) {
    const std::size_t i = p % half, j = p / half;
    for (std::size_t q = 0; q < order; ++q) {
      const std::size_t k = q % half, l = q / half;
      if (j == 0) {
        t[p][q] = (i + k) % half + half * l;
      } else if (l == 0) {
        t[p][q] = (i + half - k) % half + half;
      } else {
        t[p][q] = (i + half - k + m) % half;
      }
    }
    std::string name = power_name("a", i) + (j ? "x" : "");
    names[p] = name.empty() ? "e" : name;
  }
  return Group::from_table(std::move(t), "quaternion:" + std::to_string(m), std::move(names));
}

Group make_direct_product(const std::vector<Group>& factors) {
  if (factors.size() < 2) throw GroupError("product needs at least two factors");
  std::vector<std::vector<Element>> t = factors.front().table();
  std::vector<std::string> names = factors.front().element_names();
  std::string label = "product:";
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& lbl = factors[f].label();
    if (f) label += ",";
    label += lbl.rfind("product:", 0) == 0 ? "(" + lbl + ")" : lbl;
  }
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const auto& h = factors[f];
    const std::size_t a = t.size(), b = h.order();
    std::vector<std::vector<Element>> next(a * b, std::vector<Element>(a * b));
    std::vector<std::string> next_names(a * b);
    for (std::size_t x = 0; x < a * b; ++x) {
      for (std::size_t y = 0; y < a * b; ++y)
        next[x][y] = t[x / b][y / b] * b + h.multiply(x % b, y % b);
      next_names[x] = names[x / b] + "," + h.element_name(x % b);
    }
    t = std::move(next);
    names = std::move(next_names);
  }
  for (auto& nm : names) nm = "(" + nm + ")";
  return Group::from_table(std::move(t), std::move(label), std::move(names));
}

Group load_table_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open table file " + path.string());
  long long n = 0;
  if (!(in >> n) || n < 1) throw GroupError("table file " + path.string() + ": bad order line");
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (auto& row : t) {
    for (auto& cell : row) {
      long long v = 0;
      if (!(in >> v)) throw GroupError("table file " + path.string() + ": truncated table");
      if (v < 0 || v >= n) throw GroupError("table file " + path.string() + ": entry out of range");
      cell = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw GroupError("table file " + path.string() + ": trailing data");
  return Group::from_table(std::move(t), "table:" + path.string());
}

void write_table_group(const Group& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GroupError("cannot write table file " + path.string());
  out << g.order() << "\n";
  for (const auto& row : g.table()) {
    for (std::size_t h = 0; h < row.size(); ++h) out << (h ? " " : "") << row[h];
    out << "\n";
  }
}

Group construct_group(std::string_view raw) {
  const std::string spec = trim(raw);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw GroupError("malformed group spec '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::string_view body = std::string_view(spec).substr(colon + 1);
  if (family == "cyclic") return make_cyclic(parse_size(body, spec));
  if (family == "dihedral") return make_dihedral(parse_size(body, spec));
  if (family == "quaternion") return make_quaternion(parse_size(body, spec));
  if (family == "table") {
    if (body.empty()) throw GroupError("table: spec needs a file path");
    return load_table_group(std::string(body));
  }
  if (family == "product") {
    std::vector<Group> factors;
    for (const auto& part : split_factors(body, spec)) factors.push_back(construct_group(part));
    return make_direct_product(factors);
  }
  throw GroupError("unknown group family '" + family + "' in spec '" + spec + "'");
}

bool is_cyclic(const Group& g) {
  for (auto o : g.element_orders())
    if (o == g.order()) return true;
  return false;
}

bool is_generalized_quaternion(const Group& g) {
  const std::size_t n = g.order();
  if (n < 8 || (n & (n - 1)) != 0 || is_cyclic(g)) return false;
  std::size_t involutions = 0;
  for (auto o : g.element_orders()) involutions += (o == 2);
  return involutions == 1;
}

}  // namespace powerclass
