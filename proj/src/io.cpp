#include "k3fm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "k3fm/errors.hpp"

namespace k3fm {

Json Json::object() {
  Json j;
  j.kind_ = Kind::Object;
  return j;
}
Json Json::array() {
  Json j;
  j.kind_ = Kind::Array;
  return j;
}
Json Json::integer(Int v) {
  Json j;
  j.kind_ = Kind::Integer;
  j.int_ = std::move(v);
  return j;
}
Json Json::str(std::string v) {
  Json j;
  j.kind_ = Kind::String;
  j.str_ = std::move(v);
  return j;
}
Json Json::boolean(bool v) {
  Json j;
  j.kind_ = Kind::Bool;
  j.bool_ = v;
  return j;
}

Json& Json::add(const std::string& key, Json v) {
  if (kind_ != Kind::Object) throw validation_error("not a JSON object");
  object_.emplace_back(key, std::move(v));
  return *this;
}
Json& Json::push(Json v) {
  if (kind_ != Kind::Array) throw validation_error("not a JSON array");
  array_.push_back(std::move(v));
  return *this;
}

bool Json::has(const std::string& key) const {
  if (kind_ != Kind::Object) return false;
  for (const auto& [k, v] : object_)
    if (k == key) return true;
  return false;
}

const Json& Json::at(const std::string& key) const {
  if (kind_ != Kind::Object) throw validation_error("not a JSON object");
  for (const auto& [k, v] : object_)
    if (k == key) return v;
  throw validation_error("missing field \"" + key + "\"");
}

const std::vector<Json>& Json::items() const {
  if (kind_ != Kind::Array) throw validation_error("expected a JSON array");
  return array_;
}
const std::vector<std::pair<std::string, Json>>& Json::fields() const {
  if (kind_ != Kind::Object) throw validation_error("expected a JSON object");
  return object_;
}
const Int& Json::int_value() const {
  if (kind_ != Kind::Integer) throw validation_error("expected an integer");
  return int_;
}
const std::string& Json::str_value() const {
  if (kind_ != Kind::String) throw validation_error("expected a string");
  return str_;
}
bool Json::bool_value() const {
  if (kind_ != Kind::Bool) throw validation_error("expected a boolean");
  return bool_;
}

bool Json::operator==(const Json& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Object:
      return object_ == o.object_;
    case Kind::Array:
      return array_ == o.array_;
    case Kind::Integer:
      return int_ == o.int_;
    case Kind::String:
      return str_ == o.str_;
    case Kind::Bool:
      return bool_ == o.bool_;
  }
  return false;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' ||
                            s[i] == '\r'))
      ++i;
  }
  char peek() {
    skip_ws();
    if (i >= s.size()) throw validation_error("unexpected end of JSON input");
    return s[i];
  }
  void expect(char c) {
    if (peek() != c)
      throw validation_error(std::string("expected '") + c + "' in JSON");
    ++i;
  }

  Json value() {
    char c = peek();
    if (c == '{') return object();
    if (c == '[') return array();
    if (c == '"') return Json::str(string_lit());
    if (c == 't' || c == 'f') return boolean();
    if (c == '-' || (c >= '0' && c <= '9')) return integer();
    throw validation_error("unexpected character in JSON");
  }

  Json object() {
    expect('{');
    Json obj = Json::object();
    if (peek() == '}') {
      ++i;
      return obj;
    }
    for (;;) {
      std::string key = string_lit();
      expect(':');
      obj.add(key, value());
      char c = peek();
      ++i;
      if (c == '}') return obj;
      if (c != ',') throw validation_error("expected ',' or '}' in JSON object");
    }
  }

  Json array() {
    expect('[');
    Json arr = Json::array();
    if (peek() == ']') {
      ++i;
      return arr;
    }
    for (;;) {
      arr.push(value());
      char c = peek();
      ++i;
      if (c == ']') return arr;
      if (c != ',') throw validation_error("expected ',' or ']' in JSON array");
    }
  }

  std::string string_lit() {
    expect('"');
    std::string out;
    while (i < s.size() && s[i] != '"') {
      char c = s[i++];
      if (c == '\\') {
        if (i >= s.size()) throw validation_error("bad escape in JSON string");
        char e = s[i++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case '/': out += '/'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default:
            throw validation_error("unsupported escape in JSON string");
        }
      } else {
        out += c;
      }
    }
    if (i >= s.size()) throw validation_error("unterminated JSON string");
    ++i;
    return out;
  }

  Json boolean() {
    if (s.compare(i, 4, "true") == 0) {
      i += 4;
      return Json::boolean(true);
    }
    if (s.compare(i, 5, "false") == 0) {
      i += 5;
      return Json::boolean(false);
    }
    throw validation_error("bad literal in JSON");
  }

  Json integer() {
    std::size_t start = i;
    if (s[i] == '-') ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
      throw validation_error("non-integer numbers are not accepted");
    return Json::integer(parse_int(s.substr(start, i - start)));
  }
};

void write_rec(const Json& v, std::string& out) {
  switch (v.kind()) {
    case Json::Kind::Object: {
      out += '{';
      bool first = true;
      for (const auto& [k, child] : v.fields()) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += k;  // keys are plain identifiers in every document we emit
        out += "\":";
        write_rec(child, out);
      }
      out += '}';
      return;
    }
    case Json::Kind::Array: {
      out += '[';
      bool first = true;
      for (const Json& child : v.items()) {
        if (!first) out += ',';
        first = false;
        write_rec(child, out);
      }
      out += ']';
      return;
    }
    case Json::Kind::Integer:
      out += to_string(v.int_value());
      return;
    case Json::Kind::String: {
      out += '"';
      for (char c : v.str_value()) {
        if (c == '"' || c == '\\') {
          out += '\\';
          out += c;
        } else if (c == '\n') {
          out += "\\n";
        } else if (c == '\t') {
          out += "\\t";
        } else if (c == '\r') {
          out += "\\r";
        } else {
          out += c;
        }
      }
      out += '"';
      return;
    }
    case Json::Kind::Bool:
      out += v.bool_value() ? "true" : "false";
      return;
  }
}

}  // namespace

Json json_parse(const std::string& text) {
  Parser p{text};
  Json v = p.value();
  p.skip_ws();
  if (p.i != text.size())
    throw validation_error("trailing characters after JSON document");
  return v;
}

std::string json_write(const Json& v) {
  std::string out;
  write_rec(v, out);
  return out;
}

namespace {

IntMat matrix_from_json(const Json& rows_json) {
  const auto& rows = rows_json.items();
  std::vector<Vec> rows_v;
  for (const Json& r : rows) {
    Vec row;
    for (const Json& e : r.items()) row.push_back(e.int_value());
    rows_v.push_back(std::move(row));
  }
  return IntMat::from_rows(rows_v);
}

}  // namespace

Lattice read_lattice(const Json& doc) {
  return Lattice::validate(matrix_from_json(doc.at("gram")));
}

IntMat read_matrix(const Json& doc, const std::string& key) {
  return matrix_from_json(doc.at(key));
}

std::vector<Vec> read_vector_list(const Json& doc, const std::string& key) {
  std::vector<Vec> out;
  for (const Json& r : doc.at(key).items()) {
    Vec v;
    for (const Json& e : r.items()) v.push_back(e.int_value());
    out.push_back(std::move(v));
  }
  return out;
}

MukaiVector read_mukai_vector(const Json& doc, std::size_t rho) {
  MukaiVector v;
  v.r = doc.at("r").int_value();
  for (const Json& e : doc.at("c1").items()) v.c1.push_back(e.int_value());
  v.s = doc.at("s").int_value();
  if (v.c1.size() != rho)
    throw validation_error("mukai vector c1 has wrong length");
  return v;
}

FrobeniusData read_frobenius(const Json& doc) {
  std::vector<Int> a;
  for (const Json& e : doc.at("charpoly").items()) a.push_back(e.int_value());
  return FrobeniusData::validate(doc.at("p").int_value(),
                                 doc.at("q").int_value(), std::move(a));
}

RootSet read_rootset(const Json& doc, const Lattice& ns) {
  return RootSet::validate(ns, read_vector_list(doc, "roots"));
}

std::vector<QuarticTerm> read_quartic_terms(const Json& doc) {
  std::vector<QuarticTerm> terms;
  for (const Json& t : doc.at("terms").items()) {
    const auto& entries = t.items();
    if (entries.size() != 5)
      throw validation_error("quartic term must be [e0,e1,e2,e3,c]");
    QuarticTerm term;
    for (int i = 0; i < 4; ++i) {
      Int e = entries[i].int_value();
      if (e < 0 || e > 4) throw validation_error("quartic exponent out of range");
      term.exps[i] = static_cast<int>(e.get_si());
    }
    term.coeff = entries[4].int_value();
    terms.push_back(std::move(term));
  }
  return terms;
}

Json write_vec(const Vec& v) {
  Json arr = Json::array();
  for (const Int& e : v) arr.push(Json::integer(e));
  return arr;
}

Json write_matrix(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push(write_vec(m.row(i)));
  return rows;
}

Json write_mukai_vector(const MukaiVector& v) {
  Json obj = Json::object();
  obj.add("r", Json::integer(v.r));
  obj.add("c1", write_vec(v.c1));
  obj.add("s", Json::integer(v.s));
  return obj;
}

Json write_word(const std::vector<Generator>& word) {
  Json arr = Json::array();
  for (const Generator& g : word) {
    Json rec = Json::object();
    if (const auto* t = std::get_if<TwistGen>(&g)) {
      rec.add("gen", Json::str("twist"));
      rec.add("c1", write_vec(t->c1));
    } else if (const auto* sp = std::get_if<SphericalGen>(&g)) {
      rec.add("gen", Json::str("spherical"));
      rec.add("v", write_mukai_vector(sp->v));
    } else if (std::get_if<MinusOnePicGen>(&g)) {
      rec.add("gen", Json::str("minus_one_pic"));
    } else if (std::get_if<ShiftGen>(&g)) {
      rec.add("gen", Json::str("shift"));
    } else {
      const auto& u = std::get<UserGen>(g);
      rec.add("gen", Json::str(u.label));
      rec.add("matrix", write_matrix(u.matrix));
    }
    arr.push(std::move(rec));
  }
  return arr;
}

Json write_walk_word(const std::vector<WalkStep>& word) {
  Json arr = Json::array();
  for (const WalkStep& s : word) {
    Json rec = Json::object();
    if (s.negate) {
      rec.add("gen", Json::str("minus_one"));
    } else {
      rec.add("gen", Json::str("reflect"));
      rec.add("root", write_vec(s.root));
    }
    arr.push(std::move(rec));
  }
  return arr;
}

Vec parse_vec_arg(const std::string& csv) {
  Vec out;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    std::string trimmed;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    out.push_back(parse_int(trimmed));
  }
  if (out.empty()) throw validation_error("empty vector argument");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace k3fm
