#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/errors.hpp"
#include "json.hpp"

namespace eqlab::harness {

using json = nlohmann::json;

/// Strict reader over one JSON object: every key must be consumed by a typed
/// accessor, and finish() rejects anything left over. The effective values,
/// defaults included, are collected for the run summary.
class ConfigReader {
 public:
  ConfigReader(json source, std::string context)
      : source_(std::move(source)), context_(std::move(context)) {
    if (source_.is_null()) source_ = json::object();
    if (!source_.is_object()) fail("expected a JSON object");
  }

  double number(const std::string& key, double fallback) {
    const double v = take(key, fallback, [&](const json& j) {
      if (!j.is_number()) fail("'" + key + "' must be a number");
      return j.get<double>();
    });
    if (!std::isfinite(v)) fail("'" + key + "' must be finite");
    return v;
  }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0.0)) fail("'" + key + "' must be positive");
    return v;
  }

  long long integer(const std::string& key, long long fallback, long long min_value) {
    const long long v = take(key, fallback, [&](const json& j) {
      if (!j.is_number_integer()) fail("'" + key + "' must be an integer");
      return j.get<long long>();
    });
    if (v < min_value) fail("'" + key + "' must be at least " + std::to_string(min_value));
    return v;
  }

  std::string text(const std::string& key, std::string fallback, const std::vector<std::string>& allowed) {
    std::string v = take(key, std::move(fallback), [&](const json& j) {
      if (!j.is_string()) fail("'" + key + "' must be a string");
      return j.get<std::string>();
    });
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      fail("'" + key + "' has unsupported value '" + v + "'");
    }
    return v;
  }

  std::vector<long long> integers(const std::string& key, std::vector<long long> fallback, long long min_value) {
    auto v = take(key, std::move(fallback), [&](const json& j) {
      if (!j.is_array() || j.empty()) fail("'" + key + "' must be a non-empty array of integers");
      std::vector<long long> out;
      for (const auto& e : j) {
        if (!e.is_number_integer()) fail("'" + key + "' must contain integers");
        out.push_back(e.get<long long>());
      }
      return out;
    });
    for (auto x : v) {
      if (x < min_value) fail("'" + key + "' entries must be at least " + std::to_string(min_value));
    }
    return v;
  }

  /// Nested strict object; `build` reads it and the echo is merged back.
  template <class T>
  T object(const std::string& key, const std::function<T(ConfigReader&)>& build) {
    json sub = json::object();
    if (source_.contains(key)) sub = source_.at(key);
    consumed_.insert(key);
    ConfigReader nested(sub, context_ + "." + key);
    T value = build(nested);
    nested.finish();
    echo_[key] = nested.echo();
    return value;
  }

  void finish() const {
    for (const auto& [k, _] : source_.items()) {
      if (!consumed_.contains(k)) fail("unknown key '" + k + "'");
    }
  }

  const json& echo() const noexcept { return echo_; }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError("cli-harness", context_ + ": " + what); }

 private:
  template <class T, class F>
  T take(const std::string& key, T fallback, F convert) {
    consumed_.insert(key);
    T v = source_.contains(key) ? convert(source_.at(key)) : std::move(fallback);
    echo_[key] = v;
    return v;
  }

  json source_;
  std::string context_;
  std::set<std::string> consumed_;
  json echo_ = json::object();
};

}  // namespace eqlab::harness
