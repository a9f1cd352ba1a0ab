#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matprov/errors.hpp"
#include "matprov/prov_model.hpp"
#include "matprov/tei.hpp"

namespace matprov {

struct ChatMessage {
  std::string role;
  std::string content;
};

struct BackendRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  std::optional<double> temperature;
};

struct TokenUsage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
};

struct BackendResponse {
  std::string content;
  std::optional<TokenUsage> usage;
};

class BackendError : public Error {
public:
  BackendError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

private:
  bool retryable_;
};

// Minimal chat-completion contract. Implementations must be safe for
// concurrent use.
class ChatBackend {
public:
  virtual ~ChatBackend() = default;
  virtual BackendResponse complete(const BackendRequest& request) = 0;
};

// Stable content hash of a request (model, messages, temperature), used as
// the transcript key of the replay mock.
std::string request_hash(const BackendRequest& request);

// Replay backend: a transcript maps request hashes to a canned response
// string, or to an array of strings consumed in order (the last one repeats).
class MockBackend final : public ChatBackend {
public:
  MockBackend() = default;

  static MockBackend from_file(const std::filesystem::path& transcript);
  static MockBackend from_json_text(std::string_view text);

  void add_response(const BackendRequest& request, std::string content);
  std::string to_json_text() const;

  BackendResponse complete(const BackendRequest& request) override;

  // Every request served so far, in arrival order.
  std::vector<BackendRequest> seen_requests() const;

private:
  std::map<std::string, std::vector<std::string>> responses_;
  std::map<std::string, std::size_t> cursor_;
  std::vector<BackendRequest> seen_;
  mutable std::mutex mu_;
};

// HTTP chat-completions client (OpenAI-style wire format). The API key is
// read from the environment, never from configuration files.
class HttpBackend final : public ChatBackend {
public:
  struct Options {
    std::string base_url;  // e.g. "https://api.example.com"
    std::string chat_path = "/v1/chat/completions";
    std::string api_key_env = "MATPROV_API_KEY";
    int transport_retries = 3;
    double backoff_initial_seconds = 0.25;
    int timeout_seconds = 120;
  };

  explicit HttpBackend(Options options);
  BackendResponse complete(const BackendRequest& request) override;

private:
  Options options_;
};

struct OneShotExample {
  std::string doi;
  std::string relevant_text;
  std::string document_json;  // serialized PROV-JSONLD
};

struct PipelineConfig {
  std::string model;
  std::optional<double> temperature_relevant_text = 0.0;
  std::optional<double> temperature_extraction = 0.0;
  int retries = 2;      // extra stage-2 attempts after an invalid response
  int concurrency = 4;  // bounded in-flight papers in run_batch
  std::optional<OneShotExample> example;
};

enum class PipelineStatus { Ok, NoSynthesis, ParseFailedAfterRetries, BackendError };

std::string_view pipeline_status_name(PipelineStatus s);

struct PipelineRecord {
  std::string doi;
  std::optional<std::string> relevant_text;
  std::optional<ProcedureDocument> procedures;
  std::string document_json;  // metadata-injected serialization when Ok
  PipelineStatus status = PipelineStatus::BackendError;
  int attempts = 0;  // stage-2 extraction requests issued
  std::string error;
};

// Two-stage extraction for one paper: relevant-text selection, then
// procedure extraction with code-fence stripping, schema validation and up to
// config.retries fresh attempts on invalid JSON.
PipelineRecord run_pipeline(ChatBackend& backend, const PaperText& paper,
                            const PipelineConfig& config);

// Runs papers with bounded concurrency; results come back in input order.
std::vector<PipelineRecord> run_batch(ChatBackend& backend,
                                      std::span<const PaperText> papers,
                                      const PipelineConfig& config);

// Removes one Markdown code fence wrapper and any prose around the outermost
// JSON value. Exposed for tests.
std::string strip_to_json(std::string_view content);

}  // namespace matprov
