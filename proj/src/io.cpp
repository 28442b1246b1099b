#include "mosaic/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace mosaic {

static std::optional<Kind> parse_kind(const std::string& s) {
  for (Kind k : {Kind::Plain, Kind::Knot, Kind::Tangle, Kind::RvKnot, Kind::RvTangle})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

std::string write_mosaic(const Mosaic& m) {
  std::ostringstream os;
  os << "mosaic " << m.dim() << ' ' << kind_name(m.kind()) << '\n';
  for (int i = 1; i <= m.dim(); ++i) {
    for (int j = 1; j <= m.dim(); ++j) {
      if (j > 1) os << ' ';
      os << tile_token(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

Mosaic read_mosaic(std::istream& in) {
  std::string hdr, kind_str;
  int n = 0;
  in >> hdr >> n >> kind_str;
  if (hdr != "mosaic" || n <= 0)
    throw std::runtime_error("bad mosaic header");
  auto k = parse_kind(kind_str);
  if (!k) throw std::runtime_error("bad mosaic kind: " + kind_str);
  Mosaic m(n, *k);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::runtime_error("truncated mosaic body");
      auto t = parse_tile_token(tok);
      if (!t) throw std::runtime_error("bad tile token: " + tok);
      m.at(i, j) = *t;
    }
  }
  return m;
}

Mosaic read_mosaic_string(const std::string& text) {
  std::istringstream is(text);
  return read_mosaic(is);
}

Mosaic load_mosaic_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_mosaic(f);
}

void save_mosaic_file(const Mosaic& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << write_mosaic(m);
}

Mosaic mosaic_from_tokens(int dim, Kind kind, const std::string& tokens) {
  std::istringstream is(tokens);
  Mosaic m(dim, kind);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("mosaic_from_tokens: too few tokens");
      auto t = parse_tile_token(tok);
      if (!t) throw std::runtime_error("bad tile token: " + tok);
      m.at(i, j) = *t;
    }
  return m;
}

}  // namespace mosaic
