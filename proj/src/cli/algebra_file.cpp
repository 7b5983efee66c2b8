#include "solvspin/cli/algebra_file.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace solvspin::cli {

using exact::Rational;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_index(const std::string& tok, std::size_t n, const std::string& where) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + "bad index '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(where + "bad index '" + tok + "'");
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    throw ParseError(where + "index " + tok + " out of range 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> dim;
  std::optional<std::vector<int>> signs;
  std::optional<std::vector<std::size_t>> abelian;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<Rational, std::size_t>> brackets;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (line.rfind("abelian:", 0) == 0) {
      if (!dim) throw ParseError(where + "'dim' must come first");
      if (abelian) throw ParseError(where + "duplicate abelian line");
      std::vector<std::size_t> idx;
      std::istringstream items(line.substr(8));
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError(where + "empty abelian index");
        idx.push_back(parse_index(item, *dim, where));
      }
      if (idx.empty()) throw ParseError(where + "abelian line lists no indices");
      abelian = std::move(idx);
      continue;
    }

    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);

    if (tok[0] == "dim") {
      if (dim) throw ParseError(where + "duplicate dim line");
      if (tok.size() != 2) throw ParseError(where + "expected 'dim n'");
      std::size_t pos = 0;
      long long n = 0;
      try {
        n = std::stoll(tok[1], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok[1].size() || n < 1) throw ParseError(where + "bad dimension '" + tok[1] + "'");
      dim = static_cast<std::size_t>(n);
      continue;
    }
    if (!dim) throw ParseError(where + "'dim' must come first");

    if (tok[0] == "signs") {
      if (signs) throw ParseError(where + "duplicate signs line");
      if (tok.size() - 1 != *dim) {
        throw ParseError(where + "expected " + std::to_string(*dim) + " signs, got " + std::to_string(tok.size() - 1));
      }
      std::vector<int> s;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "+1" || tok[i] == "1") s.push_back(1);
        else if (tok[i] == "-1") s.push_back(-1);
        else throw ParseError(where + "bad sign '" + tok[i] + "'");
      }
      signs = std::move(s);
      continue;
    }

    if (tok.size() != 4) throw ParseError(where + "expected 'i j k p/q'");
    std::size_t i = parse_index(tok[0], *dim, where);
    std::size_t j = parse_index(tok[1], *dim, where);
    std::size_t k = parse_index(tok[2], *dim, where);
    Rational v;
    try {
      v = Rational::parse(tok[3]);
    } catch (const std::exception& e) {
      throw ParseError(where + "bad coefficient '" + tok[3] + "': " + e.what());
    }
    if (i == j) throw ParseError(where + "bracket [e" + tok[0] + ",e" + tok[1] + "] of a vector with itself");
    if (i > j) {
      auto mirror = brackets.find({j, i, k});
      std::string extra = mirror == brackets.end()
                              ? ""
                              : " (antisymmetric duplicate of line " + std::to_string(mirror->second.second) + ")";
      throw ParseError(where + "bracket lines need i < j, got " + tok[0] + " " + tok[1] + extra);
    }
    auto [it, fresh] = brackets.emplace(std::make_tuple(i, j, k), std::make_pair(v, lineno));
    if (!fresh) {
      throw ParseError(where + "duplicate bracket " + tok[0] + " " + tok[1] + " " + tok[2] + " (first on line " +
                       std::to_string(it->second.second) + ")");
    }
  }
  if (!dim) throw ParseError(source + ": missing 'dim' line");
  if (!signs) throw ParseError(source + ": missing 'signs' line");

  liealg::LieAlgebra<Rational> l(*dim);
  for (const auto& [key, val] : brackets) l.set_bracket(std::get<0>(key), std::get<1>(key), std::get<2>(key), val.first);
  return AlgebraFile{liealg::MetricLieAlgebra<Rational>(std::move(l), *signs), abelian};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraFile parse_algebra_file(const std::string& path) { return parse_algebra(read_file(path), path); }

std::string serialize_algebra(const AlgebraFile& file) {
  const auto& m = file.algebra;
  const std::size_t n = m.dim();
  std::ostringstream out;
  out << "dim " << n << "\nsigns";
  for (int s : m.signs()) out << (s > 0 ? " +1" : " -1");
  out << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = m.algebra().c(i, j, k);
        if (!c.is_zero()) out << i + 1 << " " << j + 1 << " " << k + 1 << " " << c.to_string() << "\n";
      }
  if (file.abelian) {
    out << "abelian: ";
    for (std::size_t a = 0; a < file.abelian->size(); ++a) out << (a ? "," : "") << (*file.abelian)[a] + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace solvspin::cli
