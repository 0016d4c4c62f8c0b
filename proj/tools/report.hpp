#pragma once

#include <iostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ordram::cli {

// Ordered report: scalars print as key=value, list entries print verbatim.
class Report {
 public:
  explicit Report(std::string command) { json_["command"] = std::move(command); }

  template <class T>
  void set(const std::string& key, const T& value) {
    json_[key] = value;
    std::string text;
    if constexpr (std::is_same_v<T, bool>)
      text = value ? "true" : "false";
    else if constexpr (std::is_arithmetic_v<T>)
      text = std::to_string(value);
    else
      text = std::string(value);
    lines_.push_back(key + "=" + text);
  }

  // bare value, printed alone in text mode
  void result(const std::string& value) {
    json_["result"] = value;
    lines_.push_back(value);
  }

  void item(const std::string& list, const std::string& text, nlohmann::ordered_json value) {
    json_[list].push_back(std::move(value));
    lines_.push_back(text);
  }

  // text mode only
  void text(std::string line) { lines_.push_back(std::move(line)); }

  nlohmann::ordered_json& json() { return json_; }

  void print(bool as_json, std::ostream& out = std::cout) const {
    if (as_json) {
      out << json_.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  nlohmann::ordered_json json_;
  std::vector<std::string> lines_;
};

}  // namespace ordram::cli
