#include "json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace kcon::cli {

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";  // defensive; payloads are finite by construction
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

Json Json::boolean(bool v) {
  Json j;
  j.type_ = Type::Bool;
  j.bool_ = v;
  return j;
}

Json Json::integer(long long v) {
  Json j;
  j.type_ = Type::Int;
  j.int_ = v;
  return j;
}

Json Json::real(double v) {
  Json j;
  j.type_ = Type::Real;
  j.real_ = v;
  return j;
}

Json Json::str(std::string v) {
  Json j;
  j.type_ = Type::Str;
  j.str_ = std::move(v);
  return j;
}

Json Json::array() {
  Json j;
  j.type_ = Type::Arr;
  return j;
}

Json Json::object() {
  Json j;
  j.type_ = Type::Obj;
  return j;
}

Json& Json::push(Json v) {
  items_.push_back(std::move(v));
  return *this;
}

Json& Json::set(std::string key, Json v) {
  members_.emplace_back(std::move(key), std::move(v));
  return *this;
}

namespace {

void write_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

}  // namespace

void Json::write(std::string& out) const {
  switch (type_) {
    case Type::Null: out += "null"; break;
    case Type::Bool: out += bool_ ? "true" : "false"; break;
    case Type::Int: out += std::to_string(int_); break;
    case Type::Real: out += format_real(real_); break;
    case Type::Str: write_escaped(str_, out); break;
    case Type::Arr: {
      out.push_back('[');
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out.push_back(',');
        items_[i].write(out);
      }
      out.push_back(']');
      break;
    }
    case Type::Obj: {
      out.push_back('{');
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out.push_back(',');
        write_escaped(members_[i].first, out);
        out.push_back(':');
        members_[i].second.write(out);
      }
      out.push_back('}');
      break;
    }
  }
}

std::string Json::dump() const {
  std::string out;
  write(out);
  return out;
}

}  // namespace kcon::cli
