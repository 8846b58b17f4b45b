#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fm/finite_field.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/transforms.hpp"
#include "k3fm/zeta.hpp"

namespace k3fm {

// Strict JSON subset: objects, arrays, strings, booleans and
// arbitrary-precision decimal integers. Object key order is preserved, the
// writer is byte-deterministic, and parse(write(x)) == x.
class Json {
 public:
  enum class Kind { Object, Array, Integer, String, Bool };

  Json() : kind_(Kind::Object) {}
  static Json object();
  static Json array();
  static Json integer(Int v);
  static Json str(std::string v);
  static Json boolean(bool v);

  Kind kind() const { return kind_; }

  Json& add(const std::string& key, Json v);  // objects
  Json& push(Json v);                         // arrays

  bool has(const std::string& key) const;
  const Json& at(const std::string& key) const;
  const std::vector<Json>& items() const;
  const std::vector<std::pair<std::string, Json>>& fields() const;
  const Int& int_value() const;
  const std::string& str_value() const;
  bool bool_value() const;

  bool operator==(const Json& o) const;

 private:
  Kind kind_;
  std::vector<std::pair<std::string, Json>> object_;
  std::vector<Json> array_;
  Int int_ = 0;
  std::string str_;
  bool bool_ = false;
};

Json json_parse(const std::string& text);
std::string json_write(const Json& v);  // compact, no trailing newline

// document readers
Lattice read_lattice(const Json& doc);
IntMat read_matrix(const Json& doc, const std::string& key);
std::vector<Vec> read_vector_list(const Json& doc, const std::string& key);
MukaiVector read_mukai_vector(const Json& doc, std::size_t rho);
FrobeniusData read_frobenius(const Json& doc);
RootSet read_rootset(const Json& doc, const Lattice& ns);
std::vector<QuarticTerm> read_quartic_terms(const Json& doc);

// document writers
Json write_vec(const Vec& v);
Json write_matrix(const IntMat& m);
Json write_mukai_vector(const MukaiVector& v);
Json write_word(const std::vector<Generator>& word);
Json write_walk_word(const std::vector<WalkStep>& word);

Vec parse_vec_arg(const std::string& csv);  // "1,0,-3"

std::string read_file(const std::string& path);

}  // namespace k3fm
