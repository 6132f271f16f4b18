#pragma once

// Report writer shared by all commands. Machine format is one record per
// line, each a space-separated list of key=value pairs; numbers use the
// shortest representation that parses back to the same double. Text format
// carries the same records laid out for reading.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace pmetric::cli {

enum class Format { Text, Machine };

/// Shortest round-trip decimal form of x.
std::string shortest(double x);

class Value {
 public:
  Value(double x);
  Value(int x);
  Value(std::size_t x);
  Value(bool x);
  Value(const char* s);
  Value(std::string s);
  Value(const nlohmann::json& j);

  std::string machine() const;
  std::string text() const;

 private:
  enum class Kind { Number, Integer, Boolean, String, Json } kind_;
  double number_ = 0.0;
  long long integer_ = 0;
  bool boolean_ = false;
  std::string string_;
};

using Field = std::pair<std::string, Value>;

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  Format format() const noexcept { return format_; }

  /// Single key=value line.
  void field(const std::string& key, const Value& v);
  /// One record with several fields.
  void record(const std::string& tag, std::initializer_list<Field> fields);
  void record(const std::string& tag, const std::vector<Field>& fields);
  /// Section title; text format only.
  void heading(const std::string& title);
  /// Full matrix, one record per entry in machine format.
  void matrix(const std::string& name, const std::vector<std::string>& labels,
              const Eigen::MatrixXd& m);

 private:
  std::ostream& out_;
  Format format_;
};

}  // namespace pmetric::cli
