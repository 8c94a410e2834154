#pragma once
// JSON input/output for the CLI and tests.
//
// Output goes through a small value tree whose objects are std::map, so keys
// serialize in sorted order; doubles print as %.11e and -0 is normalized to 0.
// The emitted bytes are therefore a deterministic function of the values,
// which the golden-file tests rely on.  Input parsing (gram matrices,
// prescribed tensors) uses nlohmann/json, which must be on the include path
// (vendor/json.hpp in this repository).

#include "core.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilricci::jsonio {

class Value {
 public:
  enum class Kind { Null, Bool, Int, Double, Str, Arr, Obj };

  Value() : kind_(Kind::Null) {}
  Value(bool v) : kind_(Kind::Bool), b_(v) {}
  Value(int v) : kind_(Kind::Int), i_(v) {}
  Value(long long v) : kind_(Kind::Int), i_(v) {}
  Value(double v) : kind_(Kind::Double), d_(v) {}
  Value(const char *v) : kind_(Kind::Str), s_(v) {}
  Value(std::string v) : kind_(Kind::Str), s_(std::move(v)) {}

  static Value array() {
    Value v;
    v.kind_ = Kind::Arr;
    return v;
  }
  static Value object() {
    Value v;
    v.kind_ = Kind::Obj;
    return v;
  }

  Value &operator[](const std::string &key) {
    if (kind_ == Kind::Null) kind_ = Kind::Obj;
    return obj_[key];
  }
  void push_back(Value v) {
    if (kind_ == Kind::Null) kind_ = Kind::Arr;
    arr_.push_back(std::move(v));
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    return out;
  }

 private:
  static void escape(std::string &out, const std::string &s) {
    out += '"';
    for (unsigned char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += static_cast<char>(c);
          }
      }
    }
    out += '"';
  }

  void write(std::string &out, int depth) const {
    const std::string pad(2 * static_cast<size_t>(depth) + 2, ' ');
    const std::string close_pad(2 * static_cast<size_t>(depth), ' ');
    switch (kind_) {
      case Kind::Null: out += "null"; break;
      case Kind::Bool: out += b_ ? "true" : "false"; break;
      case Kind::Int: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", i_);
        out += buf;
        break;
      }
      case Kind::Double: {
        double d = d_;
        if (d == 0.0) d = 0.0;  // normalize -0
        char buf[40];
        if (std::isfinite(d))
          std::snprintf(buf, sizeof(buf), "%.11e", d);
        else
          std::snprintf(buf, sizeof(buf), "null");
        out += buf;
        break;
      }
      case Kind::Str: escape(out, s_); break;
      case Kind::Arr: {
        if (arr_.empty()) {
          out += "[]";
          break;
        }
        out += "[\n";
        for (size_t i = 0; i < arr_.size(); ++i) {
          out += pad;
          arr_[i].write(out, depth + 1);
          out += (i + 1 < arr_.size()) ? ",\n" : "\n";
        }
        out += close_pad + "]";
        break;
      }
      case Kind::Obj: {
        if (obj_.empty()) {
          out += "{}";
          break;
        }
        out += "{\n";
        size_t i = 0;
        for (const auto &[k, v] : obj_) {
          out += pad;
          escape(out, k);
          out += ": ";
          v.write(out, depth + 1);
          out += (++i < obj_.size()) ? ",\n" : "\n";
        }
        out += close_pad + "}";
        break;
      }
    }
  }

  Kind kind_;
  bool b_ = false;
  long long i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Value> arr_;
  std::map<std::string, Value> obj_;
};

inline Value from_matrix(const Mat5 &m) {
  Value rows = Value::array();
  for (int i = 0; i < N; ++i) {
    Value row = Value::array();
    for (int j = 0; j < N; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// coefficient map; the A4,1+A1 branch selector "case" is emitted as an integer
inline Value from_coeffs(const Coeffs &co) {
  Value v = Value::object();
  for (const auto &[k, x] : co) {
    if (k == "case")
      v[k] = Value(static_cast<long long>(std::llround(x)));
    else
      v[k] = Value(x);
  }
  return v;
}

// ------------------------------------------------------------------ input

inline nlohmann::json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception &ex) {
    throw std::runtime_error("invalid JSON in " + path + ": " + ex.what());
  }
  return j;
}

inline Mat5 parse_matrix5(const nlohmann::json &j, const std::string &what) {
  if (!j.is_array() || j.size() != static_cast<size_t>(N))
    throw std::runtime_error(what + " must be a 5x5 array of numbers");
  Mat5 m;
  for (int i = 0; i < N; ++i) {
    const auto &row = j[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<size_t>(N))
      throw std::runtime_error(what + " must be a 5x5 array of numbers");
    for (int k = 0; k < N; ++k) {
      const auto &cell = row[static_cast<size_t>(k)];
      if (!cell.is_number()) throw std::runtime_error(what + " contains a non-number");
      m(i, k) = cell.get<double>();
    }
  }
  return m;
}

// gram file: either a bare 5x5 array, or an object with "gram"/"matrix"/"g"
inline Mat5 load_gram_file(const std::string &path) {
  nlohmann::json j = load_json_file(path);
  if (j.is_array()) return parse_matrix5(j, "gram matrix");
  if (j.is_object())
    for (const char *key : {"gram", "matrix", "g"})
      if (j.contains(key)) return parse_matrix5(j[key], "gram matrix");
  throw std::runtime_error("gram file must hold a 5x5 array (bare or under \"gram\")");
}

struct TensorFile {
  std::optional<AlgebraId> algebra;
  Mat5 matrix;
};

// tensor file: bare 5x5 array, or object with "matrix"/"T"/"tensor" and an
// optional "algebra" label
inline TensorFile load_tensor_file(const std::string &path) {
  nlohmann::json j = load_json_file(path);
  TensorFile tf;
  if (j.is_array()) {
    tf.matrix = parse_matrix5(j, "tensor");
    return tf;
  }
  if (j.is_object()) {
    if (j.contains("algebra")) {
      if (!j["algebra"].is_string())
        throw std::runtime_error("\"algebra\" must be a string");
      auto id = parse_algebra_id(j["algebra"].get<std::string>());
      if (!id) throw std::runtime_error("unknown algebra: " + j["algebra"].get<std::string>());
      tf.algebra = *id;
    }
    for (const char *key : {"matrix", "T", "tensor"})
      if (j.contains(key)) {
        tf.matrix = parse_matrix5(j[key], "tensor");
        return tf;
      }
  }
  throw std::runtime_error("tensor file must hold a 5x5 array (bare or under \"matrix\")");
}

// "alpha=1.5,beta=-2" -> coefficient map (also accepts ';' or whitespace separators)
inline Coeffs parse_coeff_list(const std::string &spec) {
  Coeffs co;
  std::string tok;
  auto flush = [&](const std::string &s) {
    if (s.empty()) return;
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error("bad coefficient entry (want name=value): " + s);
    const std::string key = s.substr(0, eq);
    const std::string val = s.substr(eq + 1);
    try {
      size_t used = 0;
      const double x = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      co[key] = x;
    } catch (const std::exception &) {
      throw std::runtime_error("bad numeric value for " + key + ": " + val);
    }
  };
  for (char c : spec) {
    if (c == ',' || c == ';' || c == ' ' || c == '\t') {
      flush(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  flush(tok);
  return co;
}

}  // namespace nilricci::jsonio
