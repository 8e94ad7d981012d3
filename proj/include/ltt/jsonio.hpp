#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ltt {

// Minimal JSON document builder.  Object keys keep insertion order and
// floating point values are printed with 17 significant digits, so the same
// inputs always serialize to the same bytes.
class Json {
 public:
  static Json object() { return Json(Kind::Object); }
  static Json array() { return Json(Kind::Array); }
  static Json str(std::string s) {
    Json j(Kind::String);
    j.str_ = std::move(s);
    return j;
  }
  static Json num(double v) {
    Json j(Kind::Number);
    j.str_ = format_double(v);
    return j;
  }
  static Json integer(long long v) {
    Json j(Kind::Number);
    j.str_ = std::to_string(v);
    return j;
  }
  static Json boolean(bool v) {
    Json j(Kind::Bool);
    j.str_ = v ? "true" : "false";
    return j;
  }
  static Json null() { return Json(Kind::Null); }

  Json& set(const std::string& key, Json v) {
    fields_.emplace_back(key, std::move(v));
    return *this;
  }
  Json& set(const std::string& key, double v) { return set(key, num(v)); }
  Json& set(const std::string& key, int v) { return set(key, integer(v)); }
  Json& set(const std::string& key, long long v) { return set(key, integer(v)); }
  Json& set(const std::string& key, bool v) { return set(key, boolean(v)); }
  Json& set(const std::string& key, const std::string& v) { return set(key, str(v)); }
  Json& set(const std::string& key, const char* v) { return set(key, str(v)); }

  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }
  Json& push(double v) { return push(num(v)); }

  static Json numbers(const std::vector<double>& vs) {
    Json a = array();
    for (double v : vs) a.push(v);
    return a;
  }

  std::string dump(int indent = 2) const {
    std::string out;
    write(out, indent, 0);
    out.push_back('\n');
    return out;
  }

  // Lookup on a built document; returns nullptr when the key is absent or
  // this node is not an object.
  const Json* find(const std::string& key) const {
    for (const auto& f : fields_)
      if (f.first == key) return &f.second;
    return nullptr;
  }
  bool is_true() const { return kind_ == Kind::Bool && str_ == "true"; }

  static std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  enum class Kind { Object, Array, String, Number, Bool, Null };
  explicit Json(Kind k) : kind_(k) {}

  static void escape(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out += buf;
          } else {
            out.push_back(ch);
          }
      }
    }
    out.push_back('"');
  }

  void write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    switch (kind_) {
      case Kind::Object: {
        if (fields_.empty()) {
          out += "{}";
          return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
          out += pad;
          escape(out, fields_[i].first);
          out += ": ";
          fields_[i].second.write(out, indent, depth + 1);
          if (i + 1 < fields_.size()) out.push_back(',');
          out.push_back('\n');
        }
        out += close_pad + "}";
        return;
      }
      case Kind::Array: {
        if (items_.empty()) {
          out += "[]";
          return;
        }
        bool scalars = true;
        for (const auto& it : items_)
          if (it.kind_ == Kind::Object || it.kind_ == Kind::Array) scalars = false;
        if (scalars) {
          out.push_back('[');
          for (std::size_t i = 0; i < items_.size(); ++i) {
            items_[i].write(out, indent, depth + 1);
            if (i + 1 < items_.size()) out += ", ";
          }
          out.push_back(']');
          return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < items_.size(); ++i) {
          out += pad;
          items_[i].write(out, indent, depth + 1);
          if (i + 1 < items_.size()) out.push_back(',');
          out.push_back('\n');
        }
        out += close_pad + "]";
        return;
      }
      case Kind::String:
        escape(out, str_);
        return;
      case Kind::Number:
      case Kind::Bool:
        out += str_;
        return;
      case Kind::Null:
        out += "null";
        return;
    }
  }

  Kind kind_ = Kind::Null;
  std::string str_;
  std::vector<std::pair<std::string, Json>> fields_;
  std::vector<Json> items_;
};

}  // namespace ltt
