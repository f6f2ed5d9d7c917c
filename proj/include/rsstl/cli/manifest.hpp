#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsstl::cli {

std::string sha1_hex(std::string_view bytes);

/// Hash git gives the same content as a blob: sha1("blob <size>\0" + bytes).
std::string git_blob_sha1(std::string_view bytes);

std::string read_file(const std::string& path);
/// Writes bytes exactly; creates parent directories.
void write_file(const std::string& path, std::string_view bytes);

/// Replay record written next to every command's outputs.
struct Manifest {
  std::string command;
  std::vector<std::string> args;  // as given after the program name
  std::uint64_t seed = 0;
  nlohmann::json config;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, blob hash
  std::vector<std::pair<std::string, std::string>> outputs;  // file name, blob hash

  void add_input(const std::string& path);
  void add_output(const std::string& name, std::string_view bytes);

  /// config_hash is the sha1 of the compact config dump.
  nlohmann::json to_json() const;
};

} // namespace rsstl::cli
