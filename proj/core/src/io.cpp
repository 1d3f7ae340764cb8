#include "rnls/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "rnls/version.hpp"

namespace rnls {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += header[i];
  }
  buf_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_)
    throw std::invalid_argument("csv: wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += cells[i];
  }
  buf_ += '\n';
}

void CsvWriter::row_values(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("csv: cannot open " + path);
  os << buf_;
}

std::string JsonWriter::quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

JsonWriter& JsonWriter::field(const std::string& key, double v) {
  fields_.emplace_back(key, format_double(v));
  return *this;
}
JsonWriter& JsonWriter::field(const std::string& key, long long v) {
  fields_.emplace_back(key, std::to_string(v));
  return *this;
}
JsonWriter& JsonWriter::field(const std::string& key, int v) {
  fields_.emplace_back(key, std::to_string(v));
  return *this;
}
JsonWriter& JsonWriter::field(const std::string& key, bool v) {
  fields_.emplace_back(key, v ? "true" : "false");
  return *this;
}
JsonWriter& JsonWriter::field(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, quote(v));
  return *this;
}
JsonWriter& JsonWriter::field_raw(const std::string& key,
                                  const std::string& raw) {
  fields_.emplace_back(key, raw);
  return *this;
}
JsonWriter& JsonWriter::field_null(const std::string& key) {
  fields_.emplace_back(key, "null");
  return *this;
}
JsonWriter& JsonWriter::field_opt(const std::string& key,
                                  std::optional<double> v) {
  return v ? field(key, *v) : field_null(key);
}

std::string JsonWriter::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += "\n  " + quote(fields_[i].first) + ": " + fields_[i].second;
  }
  out += "\n}\n";
  return out;
}

void JsonWriter::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("json: cannot open " + path);
  os << str();
}

std::string JsonWriter::array_of(const std::vector<std::string>& raw_items) {
  std::string out = "[";
  for (std::size_t i = 0; i < raw_items.size(); ++i) {
    if (i) out += ", ";
    out += raw_items[i];
  }
  out += "]";
  return out;
}

std::string timestamp_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const RunManifest& m, const std::string& path) {
  JsonWriter w;
  w.field("subcommand", m.subcommand);
  w.field("tool_version", std::string(kVersion));
  w.field("snapshot_format", std::string(kSnapshotFormat));
  std::vector<std::string> params;
  for (const auto& [k, v] : m.parameters)
    params.push_back("{" + JsonWriter::quote(k) + ": " + v + "}");
  w.field_raw("parameters", JsonWriter::array_of(params));
  w.field("grid", m.grid_description);
  w.field("seed", static_cast<long long>(m.seed));
  w.field("started_at", m.started_at);
  w.field("finished_at", m.finished_at);
  std::vector<std::string> outs;
  for (const auto& o : m.outputs) outs.push_back(JsonWriter::quote(o));
  w.field_raw("outputs", JsonWriter::array_of(outs));
  w.save(path);
}

}  // namespace rnls
