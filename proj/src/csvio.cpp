#include "hopspec/csvio.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hopspec::csvio {

namespace {

void point_row(std::ostream& os, const Complex& z, const std::string& word, const char* kind) {
  os << format_double(z.real()) << ',' << format_double(z.imag()) << ",," << word << ',' << kind
     << '\n';
}

}  // namespace

void write_word_spectrum(std::ostream& os, const WordSpectrum& ws) {
  const std::string word = ws.word.text();
  os << "re,im,theta,word,branch\n";
  for (std::size_t b = 0; b < ws.branches.size(); ++b) {
    const BlochBranch& br = ws.branches[b];
    for (std::size_t i = 0; i < br.points.size(); ++i)
      os << format_double(br.points[i].real()) << ',' << format_double(br.points[i].imag()) << ','
         << format_double(br.theta[i]) << ',' << word << ',' << b << '\n';
  }
  for (const Complex& z : ws.endpoints) point_row(os, z, word, "endpoint");
  for (const Complex& z : ws.isolated.poles) point_row(os, z, word, "pole");
  for (const Complex& z : ws.isolated.points) point_row(os, z, word, "isolated");
}

void write_eigenvalues(std::ostream& os, const std::vector<Complex>& eigs,
                       std::optional<std::uint64_t> seed, std::size_t n,
                       const std::string& source) {
  os << "re,im,seed,n,source\n";
  const std::string seed_text = seed ? std::to_string(*seed) : std::string();
  std::string source_text = source;
  for (char& c : source_text)
    if (c == ',') c = ';';  // keep the row at five fields
  for (const Complex& z : eigs)
    os << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << seed_text << ',' << n
       << ',' << source_text << '\n';
}

void write_escape_map(std::ostream& os, const EscapeMap& map) {
  os << "re,im,gamma,escape_fraction\n";
  const double dx = (map.grid.x1 - map.grid.x0) / double(map.grid.nx);
  const double dy = (map.grid.y1 - map.grid.y0) / double(map.grid.ny);
  for (std::size_t iy = 0; iy < map.grid.ny; ++iy)
    for (std::size_t ix = 0; ix < map.grid.nx; ++ix) {
      const std::size_t c = iy * map.grid.nx + ix;
      os << format_double(map.grid.x0 + (double(ix) + 0.5) * dx) << ','
         << format_double(map.grid.y0 + (double(iy) + 0.5) * dy) << ',';
      if (std::isfinite(map.gamma[c])) os << format_double(map.gamma[c]);
      os << ',' << format_double(map.escape_fraction[c]) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

bool parse_field(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

std::vector<Complex> read_points(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = split_csv_line(line);
  std::size_t re_col = header.size(), im_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "re") re_col = i;
    if (header[i] == "im") im_col = i;
  }
  if (re_col == header.size() || im_col == header.size())
    throw std::runtime_error("csv: header lacks re/im columns");

  std::vector<Complex> points;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() <= std::max(re_col, im_col)) continue;
    double re, im;
    if (parse_field(fields[re_col], re) && parse_field(fields[im_col], im))
      points.emplace_back(re, im);
  }
  return points;
}

}  // namespace hopspec::csvio
