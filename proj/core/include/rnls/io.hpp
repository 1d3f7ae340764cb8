#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rnls {

/// Floats rendered with 17 significant digits, '.' decimal, locale-free.
std::string format_double(double v);

/// CSV with a mandatory header row and comma separators.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  void row_values(const std::vector<double>& values);
  const std::string& str() const { return buf_; }
  void save(const std::string& path) const;

 private:
  std::string buf_;
  std::size_t columns_;
};

/// Minimal JSON writer with caller-controlled key order and 17-digit floats.
class JsonWriter {
 public:
  JsonWriter& field(const std::string& key, double v);
  JsonWriter& field(const std::string& key, long long v);
  JsonWriter& field(const std::string& key, int v);
  JsonWriter& field(const std::string& key, bool v);
  JsonWriter& field(const std::string& key, const std::string& v);
  JsonWriter& field_raw(const std::string& key, const std::string& raw);
  JsonWriter& field_null(const std::string& key);
  JsonWriter& field_opt(const std::string& key, std::optional<double> v);
  std::string str() const;
  void save(const std::string& path) const;

  static std::string array_of(const std::vector<std::string>& raw_items);
  static std::string quote(const std::string& s);

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;  // resolved set
  std::string grid_description;
  unsigned long long seed = 0;
  std::string started_at;
  std::string finished_at;
  std::vector<std::string> outputs;
};

std::string timestamp_utc_now();
void write_manifest(const RunManifest& m, const std::string& path);

}  // namespace rnls
