//! Principal directory, login and bearer tokens.
//!
//! A token is `<claims>.<signature>`, both base64url without padding. The
//! claims part is JSON `{"sub", "iat", "exp"}` with wall-clock timestamps;
//! the signature is HMAC-SHA256 over the claims part with the server secret.

use base64::engine::general_purpose::URL_SAFE_NO_PAD;
use base64::Engine;
use chrono::Duration;
use hmac::{Hmac, Mac};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use t2md_core::collaboration::{Principal, Role};
use t2md_core::time::Timestamp;

type HmacSha256 = Hmac<Sha256>;

#[derive(Debug, Error, PartialEq)]
#[error("users line {line}: {message}")]
pub struct UsersError {
    pub line: usize,
    pub message: String,
}

/// A parsed users file.
///
/// `U <id> <role> <password>` registers a principal and `A <patient>
/// <physician>` records a treating physician. Fields are separated by tabs
/// or spaces; `#` starts a comment line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Users {
    pub principals: Vec<(Principal, [u8; 32])>,
    pub assignments: Vec<(String, String)>,
}

pub fn password_digest(password: &str) -> [u8; 32] {
    Sha256::digest(password.as_bytes()).into()
}

impl Users {
    pub fn parse(text: &str) -> Result<Self, UsersError> {
        let mut users = Users::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| UsersError { line: i + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["U", id, role, password] => {
                    let role: Role = role.parse().map_err(|e: String| err(e))?;
                    if users.principals.iter().any(|(p, _)| p.id == *id) {
                        return Err(err(format!("duplicate principal {id:?}")));
                    }
                    users
                        .principals
                        .push((Principal { id: (*id).into(), role }, password_digest(password)));
                }
                ["A", patient, physician] => users.assignments.push(((*patient).into(), (*physician).into())),
                _ => return Err(err("expected `U id role password` or `A patient physician`".into())),
            }
        }
        Ok(users)
    }

    pub fn check_password(&self, id: &str, password: &str) -> bool {
        let digest = password_digest(password);
        self.principals.iter().any(|(p, d)| p.id == id && *d == digest)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    pub sub: String,
    #[serde(with = "ts")]
    pub iat: Timestamp,
    #[serde(with = "ts")]
    pub exp: Timestamp,
}

mod ts {
    use serde::{Deserialize, Deserializer, Serializer};
    use t2md_core::time::{format_timestamp, parse_timestamp, Timestamp};

    pub fn serialize<S: Serializer>(t: &Timestamp, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_timestamp(t))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Timestamp, D::Error> {
        let s = String::deserialize(d)?;
        parse_timestamp(&s).map_err(serde::de::Error::custom)
    }
}

/// What a successful login returns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthToken {
    pub token: String,
    pub principal_id: String,
    pub issued_at: Timestamp,
    pub expires_at: Timestamp,
}

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum TokenError {
    #[error("token is malformed")]
    Malformed,
    #[error("token signature does not verify")]
    BadSignature,
    #[error("token has expired")]
    Expired,
}

#[derive(Clone)]
pub struct TokenSigner {
    secret: Vec<u8>,
    ttl: Duration,
}

impl std::fmt::Debug for TokenSigner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TokenSigner").field("ttl", &self.ttl).finish_non_exhaustive()
    }
}

impl TokenSigner {
    pub fn new(secret: &str, ttl: Duration) -> Self {
        Self { secret: secret.as_bytes().to_vec(), ttl }
    }

    fn mac(&self) -> HmacSha256 {
        HmacSha256::new_from_slice(&self.secret).expect("hmac takes keys of any length")
    }

    pub fn issue(&self, principal_id: &str, now: Timestamp) -> AuthToken {
        let claims = Claims { sub: principal_id.into(), iat: now, exp: now + self.ttl };
        let body = URL_SAFE_NO_PAD.encode(serde_json::to_vec(&claims).expect("claims serialize"));
        let mut mac = self.mac();
        mac.update(body.as_bytes());
        let sig = URL_SAFE_NO_PAD.encode(mac.finalize().into_bytes());
        AuthToken {
            token: format!("{body}.{sig}"),
            principal_id: claims.sub,
            issued_at: claims.iat,
            expires_at: claims.exp,
        }
    }

    pub fn verify(&self, token: &str, now: Timestamp) -> Result<Claims, TokenError> {
        let (body, sig) = token.split_once('.').ok_or(TokenError::Malformed)?;
        let sig = URL_SAFE_NO_PAD.decode(sig).map_err(|_| TokenError::Malformed)?;
        let mut mac = self.mac();
        mac.update(body.as_bytes());
        mac.verify_slice(&sig).map_err(|_| TokenError::BadSignature)?;
        let raw = URL_SAFE_NO_PAD.decode(body).map_err(|_| TokenError::Malformed)?;
        let claims: Claims = serde_json::from_slice(&raw).map_err(|_| TokenError::Malformed)?;
        if now >= claims.exp {
            return Err(TokenError::Expired);
        }
        Ok(claims)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use t2md_core::time::parse_timestamp;

    fn at(s: &str) -> Timestamp {
        parse_timestamp(s).unwrap()
    }

    #[test]
    fn tokens_round_trip_and_expire() {
        let signer = TokenSigner::new("secret", Duration::minutes(10));
        let t = signer.issue("p1", at("2025-04-10T09:00:00"));
        let claims = signer.verify(&t.token, at("2025-04-10T09:09:59")).unwrap();
        assert_eq!(claims.sub, "p1");
        assert_eq!(signer.verify(&t.token, at("2025-04-10T09:10:00")), Err(TokenError::Expired));
        let other = TokenSigner::new("other", Duration::minutes(10));
        assert_eq!(other.verify(&t.token, at("2025-04-10T09:00:00")), Err(TokenError::BadSignature));
        assert_eq!(signer.verify("nodot", at("2025-04-10T09:00:00")), Err(TokenError::Malformed));
    }

    #[test]
    fn tampered_claims_fail() {
        let signer = TokenSigner::new("secret", Duration::minutes(10));
        let t = signer.issue("p1", at("2025-04-10T09:00:00"));
        let (_, sig) = t.token.split_once('.').unwrap();
        let forged = Claims { sub: "dr".into(), iat: t.issued_at, exp: t.expires_at };
        let body = URL_SAFE_NO_PAD.encode(serde_json::to_vec(&forged).unwrap());
        assert_eq!(signer.verify(&format!("{body}.{sig}"), t.issued_at), Err(TokenError::BadSignature));
    }

    #[test]
    fn users_file() {
        let u = Users::parse("# demo\nU p1 patient pw\nU dr physician x\tA p1 dr\nA p1 dr\n");
        assert_eq!(u.unwrap_err().line, 3);
        let u = Users::parse("U p1 patient pw\nU dr physician x\nA p1 dr\n").unwrap();
        assert!(u.check_password("p1", "pw"));
        assert!(!u.check_password("p1", "x"));
        assert!(!u.check_password("nobody", "pw"));
        assert_eq!(u.assignments, vec![("p1".into(), "dr".into())]);
        assert!(Users::parse("U p1 nurse pw").is_err());
        assert!(Users::parse("U p1 patient a\nU p1 patient b").is_err());
    }
}
