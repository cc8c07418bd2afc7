#include "powerclass/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "powerclass/constructions.hpp"

namespace powerclass {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}, {"labels", g.labels()}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("graph JSON: each edge must be [u, v]");
      edges.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
    Graph g(n, edges);
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

// Cells of one CSV line; double quotes group commas.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (ch == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (ch == ',' && !quoted) {
      cells.emplace_back();
    } else if (ch != '\r') {
      cells.back() += ch;
    }
  }
  if (quoted) throw FormatError("coloring CSV: unterminated quote");
  return cells;
}

}  // namespace

std::string graph_to_dot(const Graph& g, const EdgeColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << " [label=\"" << dot_escape(g.labels()[v]) << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (coloring && coloring->is_colored(e)) {
      const Color c = coloring->color(e) + 1;
      out << " [label=\"" << c << "\", colorscheme=\"set312\", color=" << ((c - 1) % 12) + 1 << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string coloring_to_csv(const EdgeColoring& c) {
  const std::size_t k = c.palette(), n = c.n();
  std::vector<std::vector<Edge>> columns(k);
  for (const auto& [e, col] : c.assignments()) columns[static_cast<std::size_t>(col)].push_back(e);
  std::size_t rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << i + 1;
  out << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      if (i) out << ",";
      if (r < columns[i].size()) {
        const auto& e = columns[i][r];
        out << "\"(" << display_label(e.u, n) << ", " << display_label(e.v, n) << ")\"";
      }
    }
    out << "\n";
  }
  return out.str();
}

EdgeColoring coloring_from_csv(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("coloring CSV: missing header row");
  const auto header = split_csv_line(line);
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto digits = header[i].find_first_not_of(" ") == std::string::npos ? std::string() : header[i];
    if (digits.empty() || digits.find_first_not_of("0123456789 ") != std::string::npos || std::stoul(digits) != i + 1)
      throw FormatError("coloring CSV: header must be 1..k, column " + std::to_string(i + 1) + " is '" + header[i] + "'");
  }
  EdgeColoring c(n, header.size());
  static const std::regex cell_re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" ,\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() > header.size()) throw FormatError("coloring CSV: row " + std::to_string(row) + " has too many cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].find_first_not_of(" ") == std::string::npos) continue;
      std::smatch m;
      if (!std::regex_match(cells[i], m, cell_re))
        throw FormatError("coloring CSV: bad cell '" + cells[i] + "' in row " + std::to_string(row));
      const auto a = std::stoul(m[1]), b = std::stoul(m[2]);
      if (a < 1 || a > n || b < 1 || b > n) throw FormatError("coloring CSV: label out of range in '" + cells[i] + "'");
      if (a == b) throw FormatError("coloring CSV: loop '" + cells[i] + "'");
      const Edge e(from_display_label(a, n), from_display_label(b, n));
      if (c.is_colored(e)) throw FormatError("coloring CSV: edge '" + cells[i] + "' listed twice");
      c.assign(e, static_cast<Color>(i));
    }
  }
  return c;
}

nlohmann::json coloring_to_json(const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [e, col] : c.assignments()) edges.push_back({{"u", e.u}, {"v", e.v}, {"color", col + 1}});
  return {{"palette", c.palette()}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const nlohmann::json& j, std::size_t n) {
  try {
    EdgeColoring c(n, j.at("palette").get<std::size_t>());
    for (const auto& item : j.at("edges")) {
      const Edge e(item.at("u").get<std::size_t>(), item.at("v").get<std::size_t>());
      if (e.v >= n) throw FormatError("coloring JSON: vertex out of range");
      if (c.is_colored(e)) throw FormatError("coloring JSON: edge listed twice");
      const auto color = item.at("color").get<long long>();
      if (color < 1) throw FormatError("coloring JSON: colors are 1-based");
      c.assign(e, static_cast<Color>(color - 1));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("coloring JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("coloring JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("coloring JSON: ") + e.what());
  }
}

nlohmann::json verification_to_json(const VerificationReport& r) {
  auto edge_list = [](const std::vector<Edge>& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : es) a.push_back({e.u, e.v});
    return a;
  };
  nlohmann::json conflicts = nlohmann::json::array();
  for (const auto& c : r.conflicts)
    conflicts.push_back({{"vertex", c.vertex},
                         {"color", c.color + 1},
                         {"edges", {{c.first.u, c.first.v}, {c.second.u, c.second.v}}}});
  return {{"valid", r.valid()},
          {"edge_count", r.edge_count},
          {"distinct_colors", r.distinct_colors},
          {"conflicts", conflicts},
          {"uncolored", edge_list(r.uncolored)},
          {"foreign_edges", edge_list(r.foreign)},
          {"out_of_palette", edge_list(r.out_of_palette)}};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw FormatError("cannot write " + p.string());
  out << content;
}

}  // namespace powerclass
