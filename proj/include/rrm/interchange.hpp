#ifndef RRM_INTERCHANGE_HPP_
#define RRM_INTERCHANGE_HPP_

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rrm/monoid.hpp"

// Monoid interchange files: a JSON object with keys
//
//   "name"     string
//   "elements" array of strings
//   "mul"      array of arrays of integers, row i column j = index of e_i e_j
//   "star"     array of integers
//   "one"      integer
//   "zero"     integer or null
//
// All indices are 0-based. write_monoid produces one canonical byte layout
// (keys in the order above, one table row per line), so reading and writing
// again reproduces the file exactly.

namespace rrm {

  inline std::string to_json_text(FiniteRRMonoid const& M) {
    using nlohmann::json;
    auto const  n = M.size();
    std::string out = "{\n";
    out += "  \"name\": " + json(M.name()).dump() + ",\n";
    out += "  \"elements\": " + json(M.element_names()).dump() + ",\n";
    out += "  \"mul\": [\n";
    for (element_type i = 0; i < n; ++i) {
      std::vector<element_type> row;
      for (element_type j = 0; j < n; ++j) {
        row.push_back(M.product(i, j));
      }
      out += "    " + json(row).dump() + (i + 1 < n ? ",\n" : "\n");
    }
    out += "  ],\n";
    out += "  \"star\": " + json(M.star_table()).dump() + ",\n";
    out += "  \"one\": " + std::to_string(M.one()) + ",\n";
    out += "  \"zero\": "
           + (M.zero() ? std::to_string(*M.zero()) : std::string("null"))
           + "\n}\n";
    return out;
  }

  namespace detail {
    inline element_type read_index(nlohmann::json const& v,
                                   std::size_t           n,
                                   std::string const&    key) {
      if (!v.is_number_integer()) {
        throw ParseError(key + ": expected an integer index");
      }
      auto x = v.get<long long>();
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw ParseError(key + ": index " + std::to_string(x)
                         + " out of range");
      }
      return static_cast<element_type>(x);
    }

    inline nlohmann::json const& require(nlohmann::json const& doc,
                                         char const*           key) {
      if (!doc.contains(key)) {
        throw ParseError(std::string(key) + ": missing key");
      }
      return doc.at(key);
    }
  }  // namespace detail

  inline FiniteRRMonoid from_json_text(std::string const& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
      throw ParseError("top level: expected a JSON object");
    }
    auto const& name = detail::require(doc, "name");
    if (!name.is_string()) {
      throw ParseError("name: expected a string");
    }
    auto const& mul = detail::require(doc, "mul");
    if (!mul.is_array() || mul.empty()) {
      throw ParseError("mul: expected a nonempty array of rows");
    }
    std::size_t const n = mul.size();
    std::vector<std::vector<element_type>> table;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& row = mul[i];
      std::string key = "mul[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != n) {
        throw ParseError(key + ": ragged table, expected " + std::to_string(n)
                         + " entries");
      }
      std::vector<element_type> r;
      for (std::size_t j = 0; j < n; ++j) {
        r.push_back(detail::read_index(row[j], n, key));
      }
      table.push_back(std::move(r));
    }
    auto const& elements = detail::require(doc, "elements");
    if (!elements.is_array() || elements.size() != n) {
      throw ParseError("elements: expected " + std::to_string(n) + " names");
    }
    std::vector<std::string> names;
    for (auto const& e : elements) {
      if (!e.is_string()) {
        throw ParseError("elements: expected strings");
      }
      names.push_back(e.get<std::string>());
    }
    auto const& star = detail::require(doc, "star");
    if (!star.is_array() || star.size() != n) {
      throw ParseError("star: expected " + std::to_string(n) + " entries");
    }
    std::vector<element_type> st;
    for (auto const& v : star) {
      st.push_back(detail::read_index(v, n, "star"));
    }
    element_type one = detail::read_index(detail::require(doc, "one"), n, "one");
    auto const&  z   = detail::require(doc, "zero");
    std::optional<element_type> zero;
    if (!z.is_null()) {
      zero = detail::read_index(z, n, "zero");
    }
    return FiniteRRMonoid(name.get<std::string>(),
                          std::move(names),
                          std::move(table),
                          std::move(st),
                          one,
                          zero);
  }

  inline FiniteRRMonoid read_monoid(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
  }

  inline void write_monoid(FiniteRRMonoid const& M, std::string const& path) {
    std::ofstream out(path);
    if (!out) {
      throw Error(path + ": cannot open file for writing");
    }
    out << to_json_text(M);
  }

}  // namespace rrm

#endif  // RRM_INTERCHANGE_HPP_
