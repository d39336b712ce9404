#include "adcap/report.hpp"

#include <cstdio>

namespace adcap {

Value Value::boolean(bool b) {
  Value v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

Value Value::integer(long long i) {
  Value v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}

Value Value::real(double d) {
  Value v;
  v.kind_ = Kind::Real;
  v.real_ = d;
  return v;
}

Value Value::str(std::string s) {
  Value v;
  v.kind_ = Kind::Str;
  v.str_ = std::move(s);
  return v;
}

Value Value::array() {
  Value v;
  v.kind_ = Kind::Array;
  return v;
}

Value Value::object() {
  Value v;
  v.kind_ = Kind::Object;
  return v;
}

void Value::push(Value element) { elements_.push_back(std::move(element)); }

void Value::add(const std::string& key, Value child) {
  fields_.emplace_back(key, std::move(child));
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

void append_escaped(const std::string& s, std::string* out) {
  out->push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': *out += "\\\""; break;
      case '\\': *out += "\\\\"; break;
      case '\n': *out += "\\n"; break;
      case '\r': *out += "\\r"; break;
      case '\t': *out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          *out += buffer;
        } else {
          out->push_back(c);
        }
    }
  }
  out->push_back('"');
}

}  // namespace

void Value::write_json(std::string* out) const {
  switch (kind_) {
    case Kind::Null: *out += "null"; break;
    case Kind::Bool: *out += bool_ ? "true" : "false"; break;
    case Kind::Int: *out += std::to_string(int_); break;
    case Kind::Real: *out += format_real(real_); break;
    case Kind::Str: append_escaped(str_, out); break;
    case Kind::Array: {
      out->push_back('[');
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out->push_back(',');
        elements_[i].write_json(out);
      }
      out->push_back(']');
      break;
    }
    case Kind::Object: {
      out->push_back('{');
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i > 0) out->push_back(',');
        append_escaped(fields_[i].first, out);
        out->push_back(':');
        fields_[i].second.write_json(out);
      }
      out->push_back('}');
      break;
    }
  }
}

void Value::write_inline(std::string* out) const {
  if (kind_ == Kind::Str) {
    *out += str_;  // text mode: bare strings
    return;
  }
  write_json(out);
}

void Value::write_text(const std::string& prefix, std::string* out) const {
  if (kind_ == Kind::Object) {
    for (const auto& [key, child] : fields_) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      child.write_text(path, out);
    }
    return;
  }
  *out += prefix;
  *out += " = ";
  write_inline(out);
  out->push_back('\n');
}

}  // namespace adcap
