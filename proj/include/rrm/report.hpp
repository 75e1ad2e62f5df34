#ifndef RRM_REPORT_HPP_
#define RRM_REPORT_HPP_

#include <string>
#include <utility>

#include "json.hpp"

#include "rrm/errors.hpp"

namespace rrm {

  enum class ReportFormat { text, json };

  inline ReportFormat parse_report_format(std::string const& s) {
    if (s == "text") {
      return ReportFormat::text;
    }
    if (s == "json") {
      return ReportFormat::json;
    }
    throw ParseError("--report: expected text or json, got " + s);
  }

  // An ordered set of key/value results. Both renderings carry the same
  // entries: JSON as one object, text as one "key: value" line each (list
  // values one item per indented line).
  class Report {
   public:
    using json = nlohmann::ordered_json;

    explicit Report(std::string command) {
      _data["command"] = std::move(command);
    }

    template <typename T>
    Report& set(std::string const& key, T&& value) {
      _data[key] = std::forward<T>(value);
      return *this;
    }

    [[nodiscard]] json const& data() const {
      return _data;
    }

    [[nodiscard]] std::string render(ReportFormat format) const {
      if (format == ReportFormat::json) {
        return _data.dump(2) + "\n";
      }
      std::string out;
      for (auto const& [key, value] : _data.items()) {
        if (value.is_array()) {
          out += key + ":" + (value.empty() ? " none\n" : "\n");
          for (auto const& item : value) {
            out += "  " + scalar(item) + "\n";
          }
        } else {
          out += key + ": " + scalar(value) + "\n";
        }
      }
      return out;
    }

   private:
    static std::string scalar(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "n/a";
      }
      return v.dump();
    }

    json _data;
  };

}  // namespace rrm

#endif  // RRM_REPORT_HPP_
