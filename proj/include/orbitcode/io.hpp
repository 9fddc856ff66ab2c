/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORBITCODE_IO_HPP
#define ORBITCODE_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "orbitcode/error.hpp"
#include "orbitcode/field.hpp"
#include "orbitcode/groupaction.hpp"
#include "orbitcode/linalg2.hpp"
#include "orbitcode/tracecodes.hpp"

namespace orbitcode::io {

using nlohmann::json;

// Code file:
//   L=<length> domain=<withzero|nonzero> rank=<rank>
//   <hex row>        (one per basis row, bit i = coordinate i)
inline void write_code(std::ostream& os, const LinearCode& code) {
  os << "L=" << code.length() << " domain=" << to_string(code.kind()) << " rank=" << code.rank() << "\n";
  for (const auto& row : code.basis()) os << row.to_hex() << "\n";
}

inline std::string code_to_string(const LinearCode& code) {
  std::ostringstream os;
  write_code(os, code);
  return os.str();
}

inline LinearCode read_code(std::istream& is) {
  std::string header;
  do {
    if (!std::getline(is, header)) throw ParseError("empty code file");
  } while (header.empty() || header[0] == '#');
  std::istringstream hs(header);
  std::size_t length = 0, rank = 0;
  std::string domain;
  bool have_l = false, have_d = false, have_r = false;
  for (std::string tok; hs >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("bad header token '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "L") {
        length = std::stoull(val);
        have_l = true;
      } else if (key == "domain") {
        domain = val;
        have_d = true;
      } else if (key == "rank") {
        rank = std::stoull(val);
        have_r = true;
      } else {
        throw ParseError("unknown header key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad header value '" + tok + "'");
    }
  }
  if (!have_l || !have_d || !have_r) throw ParseError("code header needs L=, domain= and rank=");
  const DomainKind kind = domain_kind_from_string(domain);
  std::vector<Codeword> rows;
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(Codeword::from_hex(kind, length, line));
  }
  if (rows.size() != rank) throw ParseError("header says rank " + std::to_string(rank) + " but file has " +
                                            std::to_string(rows.size()) + " rows");
  LinearCode code = span(kind, length, rows);
  if (code.rank() != rank) throw ParseError("basis rows are linearly dependent");
  return code;
}

inline LinearCode code_from_string(const std::string& s) {
  std::istringstream is(s);
  return read_code(is);
}

inline json field_to_json(const Field& f) {
  return json{{"n", f.degree()}, {"modulus_hex", f.modulus_hex()}, {"omega_hex", f.to_hex(f.generator())}};
}

/// Rebuilds the field and checks the recorded modulus and generator against it.
inline Field field_from_json(const json& j) {
  try {
    const Field f(j.at("n").get<unsigned>());
    if (detail::parse_hex(j.at("modulus_hex").get<std::string>()) != f.modulus())
      throw ParseError("field modulus does not match the canonical modulus for n=" + std::to_string(f.degree()));
    if (f.from_hex(j.at("omega_hex").get<std::string>()) != f.generator())
      throw ParseError("field generator does not match the canonical generator");
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("field descriptor: ") + e.what());
  }
}

inline json degrees_to_json(const DegreeSet& d) { return json(d.degrees()); }

inline DegreeSet degrees_from_json(unsigned n, const json& j) {
  try {
    return DegreeSet(n, j.get<std::vector<Degree>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("degree set: ") + e.what());
  }
}

inline json trace_poly_to_json(const TracePolynomial& p, const Field& f) {
  json coeffs = json::object();
  for (const auto& [d, c] : p.coeffs)
    if (!c.is_zero()) coeffs[std::to_string(d)] = f.to_hex(c);
  return json{{"domain", to_string(p.kind)}, {"n", p.n}, {"c0", p.c0}, {"c_top", p.c_top}, {"coeffs", coeffs}};
}

inline json certificate_to_json(const OrbitCertificate& c, const Field& f) {
  return json{{"field", field_to_json(f)},
              {"group", to_string(c.kind)},
              {"domain", to_string(c.generator.kind())},
              {"length", c.generator.length()},
              {"generator_hex", c.generator.to_hex()},
              {"k", c.k},
              {"span_rank", c.span_rank},
              {"target_rank", c.target_rank},
              {"verified", c.verified}};
}

/// The certificate exactly as recorded; `verified` is the writer's claim, use reverify() to check it.
inline std::pair<OrbitCertificate, Field> certificate_from_json(const json& j) {
  try {
    Field f = field_from_json(j.at("field"));
    const GroupKind kind = group_kind_from_string(j.at("group").get<std::string>());
    const DomainKind dom = domain_kind_from_string(j.at("domain").get<std::string>());
    if (dom != domain_of(kind)) throw ParseError("certificate domain does not match its group");
    const std::size_t len = j.at("length").get<std::size_t>();
    if (len != f.domain_length(dom)) throw ParseError("certificate length does not match the field");
    OrbitCertificate c{Codeword::from_hex(dom, len, j.at("generator_hex").get<std::string>()), kind,
                       j.at("k").get<std::size_t>(), j.at("span_rank").get<std::size_t>(),
                       j.at("target_rank").get<std::size_t>(), j.at("verified").get<bool>()};
    return {std::move(c), std::move(f)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace orbitcode::io

#endif  // ORBITCODE_IO_HPP
