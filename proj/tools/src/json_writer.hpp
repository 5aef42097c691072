#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kcon::cli {

// Minimal JSON tree with insertion-ordered objects and fixed float formatting
// (9 significant digits), so equal inputs always serialize to equal bytes.
// Parsing is not needed here; nlohmann/json handles the read side.
class Json {
 public:
  Json() = default;

  static Json null() { return Json(); }
  static Json boolean(bool v);
  static Json integer(long long v);
  static Json real(double v);
  static Json str(std::string v);
  static Json array();
  static Json object();

  Json& push(Json v);                   // array element, returns *this
  Json& set(std::string key, Json v);   // object member, insertion order

  std::string dump() const;

 private:
  enum class Type { Null, Bool, Int, Real, Str, Arr, Obj };
  Type type_ = Type::Null;
  bool bool_ = false;
  long long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> members_;

  void write(std::string& out) const;
};

// The shared number format for JSON and CSV payloads.
std::string format_real(double v);

}  // namespace kcon::cli
