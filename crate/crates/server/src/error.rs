//! The API's closed set of error codes and the mapping from core errors.
//!
//! Every failure body is `{"error": {"code", "message", "details"?}}`.

use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde_json::{json, Value};

use t2md_core::collaboration::CollabError;
use t2md_core::dialogue::DialogueError;
use t2md_core::knowledge::KnowledgeError;
use t2md_core::records::RecordError;
use t2md_core::reporting::ReportError;
use t2md_core::transcript::TranscriptError;

use crate::auth::TokenError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    BadRequest,
    ValidationFailed,
    BadCredentials,
    TokenMissing,
    TokenInvalid,
    TokenExpired,
    AccessDenied,
    ReadOnly,
    NotFound,
    Conflict,
    PeriodOpen,
    Internal,
}

impl ErrorCode {
    pub const ALL: [ErrorCode; 12] = [
        ErrorCode::BadRequest,
        ErrorCode::ValidationFailed,
        ErrorCode::BadCredentials,
        ErrorCode::TokenMissing,
        ErrorCode::TokenInvalid,
        ErrorCode::TokenExpired,
        ErrorCode::AccessDenied,
        ErrorCode::ReadOnly,
        ErrorCode::NotFound,
        ErrorCode::Conflict,
        ErrorCode::PeriodOpen,
        ErrorCode::Internal,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ErrorCode::BadRequest => "bad_request",
            ErrorCode::ValidationFailed => "validation_failed",
            ErrorCode::BadCredentials => "bad_credentials",
            ErrorCode::TokenMissing => "token_missing",
            ErrorCode::TokenInvalid => "token_invalid",
            ErrorCode::TokenExpired => "token_expired",
            ErrorCode::AccessDenied => "access_denied",
            ErrorCode::ReadOnly => "read_only",
            ErrorCode::NotFound => "not_found",
            ErrorCode::Conflict => "conflict",
            ErrorCode::PeriodOpen => "period_open",
            ErrorCode::Internal => "internal",
        }
    }

    pub fn status(&self) -> StatusCode {
        match self {
            ErrorCode::BadRequest => StatusCode::BAD_REQUEST,
            ErrorCode::ValidationFailed => StatusCode::UNPROCESSABLE_ENTITY,
            ErrorCode::BadCredentials | ErrorCode::TokenMissing | ErrorCode::TokenInvalid | ErrorCode::TokenExpired => {
                StatusCode::UNAUTHORIZED
            }
            ErrorCode::AccessDenied | ErrorCode::ReadOnly => StatusCode::FORBIDDEN,
            ErrorCode::NotFound => StatusCode::NOT_FOUND,
            ErrorCode::Conflict | ErrorCode::PeriodOpen => StatusCode::CONFLICT,
            ErrorCode::Internal => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub code: ErrorCode,
    pub message: String,
    pub details: Option<Value>,
}

impl ApiError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), details: None }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn not_found(what: impl std::fmt::Display) -> Self {
        Self::new(ErrorCode::NotFound, format!("{what} not found"))
    }

    pub fn body(&self) -> Value {
        let mut err = json!({ "code": self.code.as_str(), "message": self.message });
        if let Some(d) = &self.details {
            err["details"] = d.clone();
        }
        json!({ "error": err })
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        if self.code == ErrorCode::Internal {
            tracing::error!(message = %self.message, "request failed");
        }
        (self.code.status(), Json(self.body())).into_response()
    }
}

pub type ApiResult<T> = Result<T, ApiError>;

fn internal(e: impl std::fmt::Display) -> ApiError {
    ApiError::new(ErrorCode::Internal, e.to_string())
}

impl From<TokenError> for ApiError {
    fn from(e: TokenError) -> Self {
        let code = match e {
            TokenError::Expired => ErrorCode::TokenExpired,
            TokenError::Malformed | TokenError::BadSignature => ErrorCode::TokenInvalid,
        };
        ApiError::new(code, e.to_string())
    }
}

impl From<RecordError> for ApiError {
    fn from(e: RecordError) -> Self {
        match &e {
            RecordError::Implausible { value, low, high } => ApiError::new(ErrorCode::ValidationFailed, e.to_string())
                .with_details(json!({ "value": value, "band": { "low": low, "high": high } })),
            RecordError::Invalid(_) | RecordError::InvalidConfig(_) => {
                ApiError::new(ErrorCode::ValidationFailed, e.to_string())
            }
            RecordError::DuplicateEvent { .. } => ApiError::new(ErrorCode::Conflict, e.to_string()),
            RecordError::UnknownRecord(_) => ApiError::new(ErrorCode::NotFound, e.to_string()),
            RecordError::Store(_) | RecordError::Decode(_) => internal(e),
        }
    }
}

impl From<CollabError> for ApiError {
    fn from(e: CollabError) -> Self {
        match &e {
            CollabError::UnknownPrincipal(_) | CollabError::NoSuchGrant { .. } => {
                ApiError::new(ErrorCode::NotFound, e.to_string())
            }
            CollabError::DuplicatePrincipal(_) => ApiError::new(ErrorCode::Conflict, e.to_string()),
            CollabError::NotOwner { .. } => ApiError::new(ErrorCode::AccessDenied, e.to_string()),
            CollabError::Denied(reason) => {
                ApiError::new(ErrorCode::AccessDenied, e.to_string()).with_details(json!({ "reason": reason.as_str() }))
            }
            CollabError::EmptyScopes | CollabError::InvalidGrant(_) => {
                ApiError::new(ErrorCode::ValidationFailed, e.to_string())
            }
            CollabError::Store(_) | CollabError::Decode(_) => internal(e),
        }
    }
}

impl From<TranscriptError> for ApiError {
    fn from(e: TranscriptError) -> Self {
        match &e {
            TranscriptError::UnknownParticipant(_) | TranscriptError::UnknownSession(_) => {
                ApiError::new(ErrorCode::NotFound, e.to_string())
            }
            TranscriptError::NotLive(_) | TranscriptError::AlreadyClosed(_) => {
                ApiError::new(ErrorCode::Conflict, e.to_string())
            }
            TranscriptError::ChunkLog { .. } => ApiError::new(ErrorCode::BadRequest, e.to_string()),
            TranscriptError::Store(_) | TranscriptError::Encoding(_) => internal(e),
        }
    }
}

impl From<DialogueError> for ApiError {
    fn from(e: DialogueError) -> Self {
        match &e {
            DialogueError::NotIssued(_) | DialogueError::StillActive => ApiError::new(ErrorCode::Conflict, e.to_string()),
            _ => internal(e),
        }
    }
}

impl From<ReportError> for ApiError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::PeriodOpen(_) => ApiError::new(ErrorCode::PeriodOpen, e.to_string()),
            ReportError::Record(r) => r.into(),
            ReportError::Decode(_) => internal(e),
        }
    }
}

impl From<KnowledgeError> for ApiError {
    fn from(e: KnowledgeError) -> Self {
        match &e {
            KnowledgeError::UnknownNode(_) | KnowledgeError::UnknownUpdate(_) => {
                ApiError::new(ErrorCode::NotFound, e.to_string())
            }
            _ => ApiError::new(ErrorCode::ValidationFailed, e.to_string()),
        }
    }
}

impl From<t2md_core::store::StoreError> for ApiError {
    fn from(e: t2md_core::store::StoreError) -> Self {
        internal(e)
    }
}
