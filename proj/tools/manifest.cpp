#include "manifest.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ccflow/rng.hpp"
#include "ccflow/version.hpp"

namespace ccflow::tools {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("sha256_file: cannot open " + path);

  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("sha256_file: EVP context allocation failed");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);

  char buffer[1 << 16];
  while (in.good()) {
    in.read(buffer, sizeof(buffer));
    EVP_DigestUpdate(ctx, buffer, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);

  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

RunManifest::RunManifest(std::string command, nlohmann::json config_echo)
    : command_(std::move(command)),
      config_(std::move(config_echo)),
      started_(std::chrono::steady_clock::now()) {}

void RunManifest::add_output(const std::string& path) { outputs_.push_back(path); }

std::string RunManifest::write(const std::string& out_dir) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started_);

  nlohmann::json doc;
  doc["tool"] = "ccflow";
  doc["tool_version"] = kToolVersion;
  doc["rng_version"] = kRngVersion;
  doc["command"] = command_;
  doc["config"] = config_;
  doc["wall_time_ms"] = elapsed.count();
  auto& files = doc["outputs"] = nlohmann::json::array();
  for (const auto& path : outputs_) {
    files.push_back({{"path", std::filesystem::path(path).filename().string()},
                     {"bytes", std::filesystem::file_size(path)},
                     {"sha256", sha256_file(path)}});
  }

  const std::string manifest_path = (std::filesystem::path(out_dir) / "manifest.json").string();
  std::ofstream out(manifest_path);
  out << doc.dump(2) << '\n';
  return manifest_path;
}

} // namespace ccflow::tools
