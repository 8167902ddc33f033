//! Completion providers: a deterministic scripted backend for tests and
//! replay, and an HTTP client for OpenAI-compatible chat-completions
//! endpoints.

use std::collections::{BTreeMap, VecDeque};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BackendError {
    /// Transient transport failure (network, rate limit, 5xx); retryable.
    #[error("transport error: {0}")]
    Transport(String),
    /// Protocol-level failure (bad request, unparseable reply); not retryable.
    #[error("protocol error: {0}")]
    Protocol(String),
    /// The scripted backend ran out of replies.
    #[error("scripted backend exhausted after {0} replies")]
    ScriptExhausted(usize),
}

impl BackendError {
    pub fn is_retryable(&self) -> bool {
        matches!(self, BackendError::Transport(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub role: String,
    pub content: String,
}

impl Message {
    pub fn system(content: impl Into<String>) -> Self {
        Self {
            role: "system".to_string(),
            content: content.into(),
        }
    }

    pub fn user(content: impl Into<String>) -> Self {
        Self {
            role: "user".to_string(),
            content: content.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletionRequest {
    pub messages: Vec<Message>,
    pub temperature: f64,
    pub max_tokens: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub text: String,
    pub completion_tokens: Option<u32>,
    pub finish_reason: Option<String>,
}

pub trait LlmBackend: Send + Sync {
    fn complete(&self, request: &CompletionRequest) -> Result<CompletionResult, BackendError>;
}

/// Context window and output cap for a named model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub model_tag: String,
    pub context_window: u32,
    pub max_output: u32,
}

/// The two builtin GPT model specs. "16k" is read as 16384 tokens,
/// "128k" as the vendor-documented 128000.
pub fn builtin_model_specs() -> Vec<ModelSpec> {
    vec![
        ModelSpec {
            model_tag: "gpt-3.5-turbo-16k".to_string(),
            context_window: 16384,
            max_output: 4096,
        },
        ModelSpec {
            model_tag: "gpt-4-1106-preview".to_string(),
            context_window: 128000,
            max_output: 4096,
        },
    ]
}

/// One step of a scripted backend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScriptStep {
    Reply(String),
    TransportError(String),
}

struct ScriptState {
    queue: VecDeque<ScriptStep>,
    log: Vec<CompletionRequest>,
    served: usize,
}

/// Deterministic backend: pops the next scripted step on every call and
/// records the request verbatim. Access is serialized internally, so
/// the script order is total even when shared across threads.
pub struct ScriptedBackend {
    state: Mutex<ScriptState>,
}

impl ScriptedBackend {
    pub fn new(replies: Vec<String>) -> Self {
        Self::with_steps(replies.into_iter().map(ScriptStep::Reply).collect())
    }

    pub fn with_steps(steps: Vec<ScriptStep>) -> Self {
        Self {
            state: Mutex::new(ScriptState {
                queue: steps.into(),
                log: Vec::new(),
                served: 0,
            }),
        }
    }

    /// Every request received so far, in call order.
    pub fn request_log(&self) -> Vec<CompletionRequest> {
        self.state.lock().unwrap().log.clone()
    }
}

impl LlmBackend for ScriptedBackend {
    fn complete(&self, request: &CompletionRequest) -> Result<CompletionResult, BackendError> {
        let mut state = self.state.lock().unwrap();
        state.log.push(request.clone());
        match state.queue.pop_front() {
            Some(ScriptStep::Reply(text)) => {
                state.served += 1;
                Ok(CompletionResult {
                    text,
                    completion_tokens: None,
                    finish_reason: Some("stop".to_string()),
                })
            }
            Some(ScriptStep::TransportError(msg)) => {
                state.served += 1;
                Err(BackendError::Transport(msg))
            }
            None => Err(BackendError::ScriptExhausted(state.served)),
        }
    }
}

#[derive(Serialize)]
struct WireRequest<'a> {
    model: &'a str,
    messages: &'a [Message],
    temperature: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_tokens: Option<u32>,
}

#[derive(Deserialize)]
struct WireResponse {
    choices: Vec<WireChoice>,
    #[serde(default)]
    usage: Option<WireUsage>,
}

#[derive(Deserialize)]
struct WireChoice {
    message: WireMessage,
    #[serde(default)]
    finish_reason: Option<String>,
}

#[derive(Deserialize)]
struct WireMessage {
    content: String,
}

#[derive(Deserialize)]
struct WireUsage {
    #[serde(default)]
    completion_tokens: Option<u32>,
}

/// Blocking client for an OpenAI-compatible chat-completions endpoint.
/// The base URL is configurable so local stubs work.
pub struct HttpBackend {
    client: reqwest::blocking::Client,
    base_url: String,
    model_tag: String,
    api_key: Option<String>,
}

impl HttpBackend {
    pub fn new(
        base_url: impl Into<String>,
        model_tag: impl Into<String>,
        api_key: Option<String>,
        timeout: Duration,
    ) -> Result<Self, BackendError> {
        let client = reqwest::blocking::Client::builder()
            .timeout(timeout)
            .build()
            .map_err(|e| BackendError::Protocol(e.to_string()))?;
        Ok(Self {
            client,
            base_url: base_url.into().trim_end_matches('/').to_string(),
            model_tag: model_tag.into(),
            api_key,
        })
    }
}

impl LlmBackend for HttpBackend {
    fn complete(&self, request: &CompletionRequest) -> Result<CompletionResult, BackendError> {
        let url = format!("{}/chat/completions", self.base_url);
        let body = WireRequest {
            model: &self.model_tag,
            messages: &request.messages,
            temperature: request.temperature,
            max_tokens: request.max_tokens,
        };
        let mut req = self.client.post(&url).json(&body);
        if let Some(key) = &self.api_key {
            req = req.bearer_auth(key);
        }
        let resp = req
            .send()
            .map_err(|e| BackendError::Transport(e.to_string()))?;
        let status = resp.status();
        if status.as_u16() == 429 || status.is_server_error() {
            return Err(BackendError::Transport(format!("HTTP {status}")));
        }
        if !status.is_success() {
            return Err(BackendError::Protocol(format!("HTTP {status}")));
        }
        let parsed: WireResponse = resp
            .json()
            .map_err(|e| BackendError::Protocol(format!("bad response body: {e}")))?;
        let choice = parsed
            .choices
            .into_iter()
            .next()
            .ok_or_else(|| BackendError::Protocol("response has no choices".to_string()))?;
        Ok(CompletionResult {
            text: choice.message.content,
            completion_tokens: parsed.usage.and_then(|u| u.completion_tokens),
            finish_reason: choice.finish_reason,
        })
    }
}

/// A named backend plus the model spec that bounds its prompts.
#[derive(Clone)]
pub struct BackendSlot {
    pub backend: Arc<dyn LlmBackend>,
    pub spec: ModelSpec,
}

/// Resolves the `backend_id` of an agent profile to a concrete backend.
#[derive(Default, Clone)]
pub struct BackendRegistry {
    slots: BTreeMap<String, BackendSlot>,
}

impl BackendRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(
        &mut self,
        backend_id: impl Into<String>,
        backend: Arc<dyn LlmBackend>,
        spec: ModelSpec,
    ) {
        self.slots.insert(backend_id.into(), BackendSlot { backend, spec });
    }

    pub fn get(&self, backend_id: &str) -> Option<&BackendSlot> {
        self.slots.get(backend_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{Read, Write};
    use std::net::TcpListener;

    fn request(text: &str) -> CompletionRequest {
        CompletionRequest {
            messages: vec![Message::user(text)],
            temperature: 1.0,
            max_tokens: None,
        }
    }

    #[test]
    fn scripted_backend_pops_in_order_then_exhausts() {
        let backend = ScriptedBackend::new(vec!["A".into(), "B".into()]);
        assert_eq!(backend.complete(&request("1")).unwrap().text, "A");
        assert_eq!(backend.complete(&request("2")).unwrap().text, "B");
        assert!(matches!(
            backend.complete(&request("3")),
            Err(BackendError::ScriptExhausted(2))
        ));
    }

    #[test]
    fn scripted_backend_records_requests_verbatim() {
        let backend = ScriptedBackend::new(vec!["A".into()]);
        let req = request("hello there");
        backend.complete(&req).unwrap();
        assert_eq!(backend.request_log(), vec![req]);
    }

    #[test]
    fn scripted_transport_errors_are_retryable() {
        let backend = ScriptedBackend::with_steps(vec![
            ScriptStep::TransportError("flaky".into()),
            ScriptStep::Reply("ok".into()),
        ]);
        let err = backend.complete(&request("x")).unwrap_err();
        assert!(err.is_retryable());
        assert_eq!(backend.complete(&request("x")).unwrap().text, "ok");
    }

    #[test]
    fn builtin_specs_match_documented_limits() {
        let specs = builtin_model_specs();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[0].model_tag, "gpt-3.5-turbo-16k");
        assert_eq!(specs[0].context_window, 16384);
        assert_eq!(specs[0].max_output, 4096);
        assert_eq!(specs[1].context_window, 128000);
        assert_eq!(specs[1].max_output, 4096);
    }

    /// Minimal one-shot HTTP stub returning a fixed chat-completions body.
    fn serve_once(body: &'static str, status: &'static str) -> String {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        std::thread::spawn(move || {
            let (mut stream, _) = listener.accept().unwrap();
            let mut buf = [0u8; 8192];
            let _ = stream.read(&mut buf);
            let response = format!(
                "HTTP/1.1 {status}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            );
            stream.write_all(response.as_bytes()).unwrap();
        });
        format!("http://{addr}")
    }

    #[test]
    fn http_backend_parses_stub_response() {
        let base = serve_once(
            r#"{"choices":[{"message":{"content":"stubbed reply"},"finish_reason":"stop"}],"usage":{"completion_tokens":7}}"#,
            "200 OK",
        );
        let backend =
            HttpBackend::new(base, "gpt-test", None, Duration::from_secs(5)).unwrap();
        let result = backend.complete(&request("hi")).unwrap();
        assert_eq!(result.text, "stubbed reply");
        assert_eq!(result.completion_tokens, Some(7));
    }

    #[test]
    fn http_backend_maps_server_errors_to_transport() {
        let base = serve_once("{}", "503 Service Unavailable");
        let backend =
            HttpBackend::new(base, "gpt-test", None, Duration::from_secs(5)).unwrap();
        let err = backend.complete(&request("hi")).unwrap_err();
        assert!(err.is_retryable());
    }

    #[test]
    fn http_backend_maps_client_errors_to_protocol() {
        let base = serve_once("{}", "400 Bad Request");
        let backend =
            HttpBackend::new(base, "gpt-test", None, Duration::from_secs(5)).unwrap();
        let err = backend.complete(&request("hi")).unwrap_err();
        assert!(matches!(err, BackendError::Protocol(_)));
    }
}
