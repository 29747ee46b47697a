#include "fuglede/set_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace fuglede {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw parse_error("expected a non-negative integer, got '" + std::string(token) + "'", line);
  return value;
}

}  // namespace

PointSet load_point_set(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<GroupParams> params;
  std::vector<GroupVector> elements;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!params) {
      // Header: p=<p> d=<d>
      unsigned p = 0, d = 0;
      if (std::sscanf(std::string(line).c_str(), "p=%u d=%u", &p, &d) != 2)
        throw parse_error("expected header 'p=<p> d=<d>'", line_no);
      try {
        params.emplace(p, d);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), line_no);
      }
      continue;
    }

    std::vector<Residue> coords;
    coords.reserve(params->d());
    std::string_view rest = line;
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view token = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      const std::uint64_t value = parse_number(token, line_no);
      if (value >= params->p())
        throw parse_error("residue " + std::to_string(value) + " out of range [0, " +
                              std::to_string(params->p()) + ")",
                          line_no);
      coords.push_back(static_cast<Residue>(value));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (coords.size() != params->d())
      throw parse_error("expected " + std::to_string(params->d()) + " coordinates, got " +
                            std::to_string(coords.size()),
                        line_no);

    GroupVector v(*params, std::move(coords));
    for (const auto& e : elements)
      if (e == v) throw parse_error("duplicate vector", line_no);
    elements.push_back(std::move(v));
  }

  if (!params) throw parse_error("missing header 'p=<p> d=<d>'", line_no == 0 ? 1 : line_no);
  return PointSet(*params, std::move(elements));
}

PointSet load_point_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path.string());
  return load_point_set(in);
}

void save_point_set(std::ostream& out, const PointSet& s) {
  out << "p=" << s.params().p() << " d=" << s.params().d() << "\n";
  for (const auto& v : s) {
    for (std::size_t k = 0; k < v.coords().size(); ++k) {
      if (k > 0) out << ',';
      out << v[k];
    }
    out << "\n";
  }
}

void save_point_set(const std::filesystem::path& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file: " + path.string());
  save_point_set(out, s);
}

}  // namespace fuglede
