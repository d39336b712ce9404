#pragma once

#include <string>
#include <utility>
#include <vector>

namespace adcap {

// Ordered JSON-like document with byte-stable serialization: object keys
// keep insertion order and reals print with up to 17 significant digits, so
// identical inputs always produce identical report bytes.
class Value {
 public:
  enum class Kind { Null, Bool, Int, Real, Str, Array, Object };

  Value() = default;
  static Value boolean(bool b);
  static Value integer(long long i);
  static Value real(double d);
  static Value str(std::string s);
  static Value array();
  static Value object();

  Kind kind() const { return kind_; }

  void push(Value element);                      // arrays
  void add(const std::string& key, Value child);  // objects

  void write_json(std::string* out) const;
  // "prefix.key = value" lines; arrays and scalars inline.
  void write_text(const std::string& prefix, std::string* out) const;

 private:
  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Value> elements_;
  std::vector<std::pair<std::string, Value>> fields_;

  void write_inline(std::string* out) const;
};

std::string format_real(double value);  // %.17g

}  // namespace adcap
