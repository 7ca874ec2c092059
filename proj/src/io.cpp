#include "dgcm/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dgcm/errors.hpp"

namespace dgcm {

namespace {

using nlohmann::json;

int to_index(const json& v, int n, const char* field) {
  if (!v.is_number_integer()) throw ParseError(std::string(field) + ": indices must be integers");
  const int i = v.get<int>();
  if (i < 1 || i > n) {
    throw ParseError(std::string(field) + ": index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n));
  }
  return i - 1;
}

std::vector<std::pair<int, int>> read_pairs(const json& v, int n, const char* field) {
  if (!v.is_array()) throw ParseError(std::string(field) + " must be a list of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) throw ParseError(std::string(field) + " entries must be pairs");
    out.emplace_back(to_index(p[0], n, field), to_index(p[1], n, field));
  }
  return out;
}

std::vector<int> read_ints(const json& v, std::size_t n, const char* field) {
  if (!v.is_array() || v.size() != n) {
    throw ParseError(std::string(field) + " must list one integer per vertex");
  }
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string(field) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::vector<int> parse_word(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> out;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("word letter '" + token + "' is not an integer");
    }
    if (used != token.size() || v < 1) throw ParseError("word letter '" + token + "' is invalid");
    out.push_back(v - 1);
  }
  return out;
}

InputSpec parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  static const char* const known[] = {"cartan",       "symmetrizer", "orientation", "height",
                                      "quiver_edges", "word_prefix", "word_period"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("unknown field '" + key + "'");
    }
  }
  if (!doc.contains("cartan")) throw ParseError("missing required field 'cartan'");

  InputSpec spec;
  const json& c = doc["cartan"];
  if (!c.is_array() || c.empty()) throw ParseError("cartan must be a non-empty matrix");
  const auto n = c.size();
  for (const auto& row : c) spec.cartan.push_back(read_ints(row, n, "cartan"));
  const int ni = static_cast<int>(n);

  if (doc.contains("symmetrizer")) spec.symmetrizer = read_ints(doc["symmetrizer"], n, "symmetrizer");
  if (doc.contains("orientation")) spec.orientation = read_pairs(doc["orientation"], ni, "orientation");
  if (doc.contains("height")) spec.height = read_ints(doc["height"], n, "height");
  if (doc.contains("quiver_edges")) {
    std::vector<QuiverEdge> edges;
    for (auto [s, t] : read_pairs(doc["quiver_edges"], ni, "quiver_edges")) edges.push_back({s, t});
    spec.quiver_edges = std::move(edges);
  }
  if (doc.contains("word_prefix") || doc.contains("word_period")) {
    PeriodicWord w;
    for (const char* field : {"word_prefix", "word_period"}) {
      if (!doc.contains(field)) continue;
      if (!doc[field].is_string()) throw ParseError(std::string(field) + " must be a string");
      auto letters = parse_word(doc[field].get<std::string>());
      for (int a : letters) {
        if (a >= ni) throw ParseError(std::string(field) + ": letter out of range");
      }
      (std::string(field) == "word_prefix" ? w.prefix : w.period) = std::move(letters);
    }
    spec.word = std::move(w);
  }
  return spec;
}

InputSpec read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

Gcm make_gcm(const InputSpec& spec) {
  return Gcm::create(spec.cartan, spec.symmetrizer, spec.orientation);
}

std::string render_series(const TruncatedSeries& s) {
  std::ostringstream os;
  if (!s.poly().is_zero()) os << s.poly().str() << " + ";
  os << "O(t^" << s.trunc() + 1 << ')';
  return os.str();
}

void write_records(std::ostream& os, const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [mono, c] : m(i, j)) {
        os << i + 1 << '\t' << j + 1 << '\t' << mono.str() << '\t' << c << '\n';
      }
    }
  }
}

void write_records(std::ostream& os, const Matrix<TruncatedSeries>& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = m(i, j).poly();
  }
  write_records(os, p);
}

}  // namespace dgcm
