#include "emit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace pmetric::cli {
namespace {

bool is_bare(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '.' || c == '/' || c == ':' || c == '+' || c == '-';
  });
}

std::string readable(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.10g", x);
  return buf.data();
}

}  // namespace

std::string shortest(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

Value::Value(double x) : kind_(Kind::Number), number_(x) {}
Value::Value(int x) : kind_(Kind::Integer), integer_(x) {}
Value::Value(std::size_t x) : kind_(Kind::Integer), integer_(static_cast<long long>(x)) {}
Value::Value(bool x) : kind_(Kind::Boolean), boolean_(x) {}
Value::Value(const char* s) : kind_(Kind::String), string_(s) {}
Value::Value(std::string s) : kind_(Kind::String), string_(std::move(s)) {}
Value::Value(const nlohmann::json& j) : kind_(Kind::Json), string_(j.dump()) {}

std::string Value::machine() const {
  switch (kind_) {
    case Kind::Number: return shortest(number_);
    case Kind::Integer: return std::to_string(integer_);
    case Kind::Boolean: return boolean_ ? "true" : "false";
    case Kind::String: return is_bare(string_) ? string_ : nlohmann::json(string_).dump();
    case Kind::Json: return string_;
  }
  return {};
}

std::string Value::text() const {
  switch (kind_) {
    case Kind::Number: return readable(number_);
    case Kind::Boolean: return boolean_ ? "yes" : "no";
    case Kind::String: return string_;
    default: return machine();
  }
}

void Emitter::field(const std::string& key, const Value& v) {
  if (format_ == Format::Machine) {
    out_ << key << '=' << v.machine() << '\n';
  } else {
    out_ << std::left << std::setw(22) << (key + ":") << ' ' << v.text() << '\n';
  }
}

void Emitter::record(const std::string& tag, std::initializer_list<Field> fields) {
  record(tag, std::vector<Field>(fields));
}

void Emitter::record(const std::string& tag, const std::vector<Field>& fields) {
  if (format_ == Format::Machine) {
    out_ << tag;
    for (const auto& [k, v] : fields) out_ << ' ' << k << '=' << v.machine();
    out_ << '\n';
  } else {
    out_ << "  " << tag;
    for (const auto& [k, v] : fields) out_ << "  " << k << ' ' << v.text();
    out_ << '\n';
  }
}

void Emitter::heading(const std::string& title) {
  if (format_ == Format::Text) out_ << '\n' << title << '\n';
}

void Emitter::matrix(const std::string& name, const std::vector<std::string>& labels,
                     const Eigen::MatrixXd& m) {
  if (format_ == Format::Machine) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        record(name, {{"x", labels[static_cast<std::size_t>(i)]},
                      {"y", labels[static_cast<std::size_t>(j)]},
                      {"value", m(i, j)}});
      }
    }
    return;
  }
  heading(name);
  std::size_t w = 8;
  for (const auto& l : labels) w = std::max(w, l.size() + 1);
  out_ << std::setw(static_cast<int>(w)) << "";
  for (const auto& l : labels) out_ << std::right << std::setw(14) << l;
  out_ << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out_ << std::left << std::setw(static_cast<int>(w)) << labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.cols(); ++j) out_ << std::right << std::setw(14) << readable(m(i, j));
    out_ << '\n';
  }
}

}  // namespace pmetric::cli
