// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qconf/commitment.hpp"

#include <openssl/evp.h>

#include "qconf/errors.hpp"

namespace qconf {

namespace {

std::string sha256_hex(const std::vector<std::uint8_t>& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr ||
      EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &digest_len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error("sha256 digest failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * digest_len);
  for (unsigned int i = 0; i < digest_len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string digest_for(const std::vector<int>& bits,
                       const std::array<std::uint8_t, 16>& salt) {
  std::vector<std::uint8_t> data;
  data.reserve(bits.size() + salt.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw InvalidOperandError("commitment bits must be 0 or 1");
    }
    data.push_back(static_cast<std::uint8_t>('0' + b));
  }
  data.insert(data.end(), salt.begin(), salt.end());
  return sha256_hex(data);
}

}  // namespace

Commitment commit_bits(const std::vector<int>& bits, RngEngine& rng) {
  Commitment token;
  std::uint64_t lo = rng.next_u64();
  std::uint64_t hi = rng.next_u64();
  for (int i = 0; i < 8; ++i) {
    token.salt[i] = static_cast<std::uint8_t>((lo >> (8 * i)) & 0xff);
    token.salt[8 + i] = static_cast<std::uint8_t>((hi >> (8 * i)) & 0xff);
  }
  token.digest_hex = digest_for(bits, token.salt);
  return token;
}

bool verify_commitment(const Commitment& token, const std::vector<int>& bits) {
  return digest_for(bits, token.salt) == token.digest_hex;
}

}  // namespace qconf
