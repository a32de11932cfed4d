#include "holonomic/specfile.hpp"

#include <optional>
#include <sstream>

#include "holonomic/scalar/ball.hpp"

namespace holo {

namespace {

size_t parse_index(const std::string& tok, size_t bound, int line, const char* what) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-') {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
  }
  if (v >= bound) throw ParseError(std::string(what) + " " + tok + " out of range", line);
  return v;
}

std::string rest_of(std::istringstream& in) {
  std::string rest;
  std::getline(in, rest);
  auto first = rest.find_first_not_of(" \t");
  return first == std::string::npos ? std::string() : rest.substr(first);
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<size_t> order;
  std::vector<BiPoly> entries;
  std::vector<bool> seen;
  std::optional<BiPoly> den;
  SpecFile spec;
  while (std::getline(lines, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream in(raw);
    std::string key;
    if (!(in >> key)) continue;
    auto poly = [&](const std::string& body) {
      if (body.empty()) throw ParseError("missing polynomial", line);
      try {
        return BiPoly::parse(body);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
    };
    if (key == "order") {
      if (order) throw ParseError("duplicate order", line);
      std::string tok;
      in >> tok;
      size_t r = parse_index(tok, 9, line, "order");
      if (r == 0) throw ParseError("order must be positive", line);
      if (!rest_of(in).empty()) throw ParseError("trailing text after order", line);
      order = r;
      entries.assign(r * r, BiPoly());
      seen.assign(r * r, false);
      spec.init.assign(r, "0");
    } else if (!order) {
      throw ParseError("'" + key + "' before order", line);
    } else if (key == "den") {
      if (den) throw ParseError("duplicate den", line);
      den = poly(rest_of(in));
      if (den->is_zero()) throw ParseError("denominator is identically zero", line);
    } else if (key == "entry") {
      std::string ti, tj;
      in >> ti >> tj;
      size_t i = parse_index(ti, *order, line, "row");
      size_t j = parse_index(tj, *order, line, "column");
      if (seen[i * *order + j]) throw ParseError("duplicate entry " + ti + " " + tj, line);
      seen[i * *order + j] = true;
      entries[i * *order + j] = poly(rest_of(in));
    } else if (key == "init") {
      std::string ti;
      in >> ti;
      size_t i = parse_index(ti, *order, line, "init index");
      std::string value = rest_of(in);
      if (value.empty()) throw ParseError("missing init value", line);
      try {
        Ball::from_string(value, 64);
      } catch (const Error& e) {
        throw ParseError(std::string("bad init value: ") + e.what(), line);
      }
      spec.init[i] = value;
      spec.has_init = true;
    } else {
      throw ParseError("unknown keyword '" + key + "'", line);
    }
  }
  if (!order) throw ParseError("missing order", line);
  spec.matrix = RecMatrix(*order, std::move(entries), den ? *den : BiPoly::constant(1));
  return spec;
}

std::string serialize_spec(const SpecFile& spec) {
  const RecMatrix& M = spec.matrix;
  std::ostringstream out;
  out << "order " << M.order() << "\n";
  if (!M.den_is_one()) out << "den " << M.den().to_string() << "\n";
  for (size_t i = 0; i < M.order(); ++i) {
    for (size_t j = 0; j < M.order(); ++j) {
      if (!M.entry(i, j).is_zero()) out << "entry " << i << " " << j << " " << M.entry(i, j).to_string() << "\n";
    }
  }
  if (spec.has_init) {
    for (size_t i = 0; i < spec.init.size(); ++i) out << "init " << i << " " << spec.init[i] << "\n";
  }
  return out.str();
}

}  // namespace holo
