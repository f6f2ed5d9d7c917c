#include "rsstl/cli/manifest.hpp"

#include <openssl/sha.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsstl::cli {

std::string sha1_hex(std::string_view bytes) {
  unsigned char md[SHA_DIGEST_LENGTH];
  SHA1(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : md) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 15]);
  }
  return out;
}

std::string git_blob_sha1(std::string_view bytes) {
  std::string buf = "blob " + std::to_string(bytes.size());
  buf.push_back('\0');
  buf.append(bytes);
  return sha1_hex(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

void Manifest::add_input(const std::string& path) { inputs.emplace_back(path, git_blob_sha1(read_file(path))); }

void Manifest::add_output(const std::string& name, std::string_view bytes) {
  outputs.emplace_back(name, git_blob_sha1(bytes));
}

nlohmann::json Manifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["args"] = args;
  j["seed"] = seed;
  j["config"] = config;
  j["config_hash"] = sha1_hex(config.dump());
  j["inputs"] = nlohmann::json::array();
  for (const auto& [p, h] : inputs) j["inputs"].push_back({{"path", p}, {"git_blob_sha1", h}});
  j["outputs"] = nlohmann::json::array();
  for (const auto& [p, h] : outputs) j["outputs"].push_back({{"path", p}, {"git_blob_sha1", h}});
  return j;
}

} // namespace rsstl::cli
