//! Patient-managed access grants, the access chokepoint and alert routing.
//!
//! Access is allowed when the reader is the patient, a treating physician
//! reading a clinical scope, or a grantee holding an unexpired grant for the
//! scope. Everything else is denied. Grant, revoke and every denial append
//! an audit line `ts<TAB>op<TAB>principal<TAB>patient<TAB>scope<TAB>result`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::records::model::string_enum;
use crate::records::Alert;
use crate::store::{StoreAdapter, StoreError};
use crate::time::{format_timestamp, Timestamp};

string_enum!(Role {
    Patient => "patient",
    Physician => "physician",
    FamilyViewer => "family_viewer",
});

string_enum!(Scope {
    MedicationStatus => "medication_status",
    GlucoseTrends => "glucose_trends",
    ConsultationHistory => "consultation_history",
    Reports => "reports",
    Alerts => "alerts",
});

impl Scope {
    /// Scopes a treating physician reads without a grant.
    pub const PHYSICIAN_IMPLICIT: [Scope; 4] = [
        Scope::ConsultationHistory,
        Scope::Reports,
        Scope::MedicationStatus,
        Scope::GlucoseTrends,
    ];
}

string_enum!(Channel {
    Push => "push",
    InApp => "in_app",
});

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Principal {
    pub id: String,
    pub role: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grant {
    pub patient_id: String,
    pub grantee_id: String,
    pub scopes: BTreeSet<Scope>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expires_at: Option<Timestamp>,
    pub granted_by: String,
}

impl Grant {
    pub fn expired(&self, now: Timestamp) -> bool {
        self.expires_at.is_some_and(|e| now >= e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AllowReason {
    SelfAccess,
    TreatingPhysician,
    Granted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DenyReason {
    UnknownPrincipal,
    NoGrant,
    ScopeNotGranted,
    Expired,
}

impl DenyReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            DenyReason::UnknownPrincipal => "unknown_principal",
            DenyReason::NoGrant => "no_grant",
            DenyReason::ScopeNotGranted => "scope_not_granted",
            DenyReason::Expired => "expired",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "decision", content = "reason", rename_all = "snake_case")]
pub enum Decision {
    Allow(AllowReason),
    Deny(DenyReason),
}

impl Decision {
    pub fn is_allow(&self) -> bool {
        matches!(self, Decision::Allow(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotificationIntent {
    pub recipient_id: String,
    pub alert_id: String,
    pub channel: Channel,
    pub created_at: Timestamp,
}

#[derive(Debug, Error)]
pub enum CollabError {
    #[error("unknown principal {0:?}")]
    UnknownPrincipal(String),
    #[error("principal {0:?} already registered")]
    DuplicatePrincipal(String),
    #[error("{caller:?} may not manage grants for patient {patient:?}")]
    NotOwner { caller: String, patient: String },
    #[error("a grant needs at least one scope")]
    EmptyScopes,
    #[error("invalid grant: {0}")]
    InvalidGrant(String),
    #[error("no grant from {patient:?} to {grantee:?}")]
    NoSuchGrant { patient: String, grantee: String },
    #[error("access denied: {}", .0.as_str())]
    Denied(DenyReason),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("stored grant could not be decoded: {0}")]
    Decode(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub at: Timestamp,
    pub op: String,
    pub principal: String,
    pub patient: String,
    pub scope: String,
    pub result: String,
}

impl AuditEntry {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            format_timestamp(&self.at),
            self.op,
            self.principal,
            self.patient,
            self.scope,
            self.result
        )
    }
}

#[derive(Debug, Default)]
struct Tables {
    principals: BTreeMap<String, Role>,
    /// patient -> treating physicians
    treating: BTreeMap<String, BTreeSet<String>>,
    grants: BTreeMap<(String, String), Grant>,
}

impl Tables {
    fn decide(&self, grantee: &str, patient: &str, scope: Scope, now: Timestamp) -> Decision {
        let Some(role) = self.principals.get(grantee) else {
            return Decision::Deny(DenyReason::UnknownPrincipal);
        };
        if grantee == patient && *role == Role::Patient {
            return Decision::Allow(AllowReason::SelfAccess);
        }
        if *role == Role::Physician
            && Scope::PHYSICIAN_IMPLICIT.contains(&scope)
            && self.treating.get(patient).is_some_and(|p| p.contains(grantee))
        {
            return Decision::Allow(AllowReason::TreatingPhysician);
        }
        match self.grants.get(&(patient.to_owned(), grantee.to_owned())) {
            None => Decision::Deny(DenyReason::NoGrant),
            Some(g) if g.expired(now) => Decision::Deny(DenyReason::Expired),
            Some(g) if g.scopes.contains(&scope) => Decision::Allow(AllowReason::Granted),
            Some(_) => Decision::Deny(DenyReason::ScopeNotGranted),
        }
    }
}

/// The grant table plus principal registry. Checks run concurrently; grant
/// writes are serialized.
#[derive(Debug)]
pub struct AccessControl {
    tables: RwLock<Tables>,
    audit: Mutex<Vec<AuditEntry>>,
    store: Option<Arc<dyn StoreAdapter>>,
}

impl Default for AccessControl {
    fn default() -> Self {
        Self::new()
    }
}

fn grant_key(patient: &str, grantee: &str) -> String {
    format!("grant/{patient}/{grantee}")
}

impl AccessControl {
    pub fn new() -> Self {
        Self {
            tables: RwLock::new(Tables::default()),
            audit: Mutex::new(Vec::new()),
            store: None,
        }
    }

    /// Persist grants and audit lines in `store`, loading grants already
    /// there. Principals must be registered before their grants are used.
    pub fn with_store(store: Arc<dyn StoreAdapter>) -> Result<Self, CollabError> {
        let mut tables = Tables::default();
        for key in store.keys_at("grant/", store.snapshot()) {
            if let Some(doc) = store.get(&key) {
                if doc.is_empty() {
                    continue; // revoked
                }
                let g: Grant = serde_json::from_str(&doc)?;
                tables.grants.insert((g.patient_id.clone(), g.grantee_id.clone()), g);
            }
        }
        Ok(Self {
            tables: RwLock::new(tables),
            audit: Mutex::new(Vec::new()),
            store: Some(store),
        })
    }

    pub fn register(&self, principal: Principal) -> Result<(), CollabError> {
        let mut t = self.tables.write();
        if t.principals.contains_key(&principal.id) {
            return Err(CollabError::DuplicatePrincipal(principal.id));
        }
        t.principals.insert(principal.id, principal.role);
        Ok(())
    }

    pub fn role_of(&self, id: &str) -> Option<Role> {
        self.tables.read().principals.get(id).copied()
    }

    pub fn principals(&self) -> Vec<Principal> {
        self.tables
            .read()
            .principals
            .iter()
            .map(|(id, role)| Principal { id: id.clone(), role: *role })
            .collect()
    }

    pub fn assign_physician(&self, patient_id: &str, physician_id: &str) -> Result<(), CollabError> {
        let mut t = self.tables.write();
        if t.principals.get(patient_id) != Some(&Role::Patient) {
            return Err(CollabError::UnknownPrincipal(patient_id.to_owned()));
        }
        if t.principals.get(physician_id) != Some(&Role::Physician) {
            return Err(CollabError::UnknownPrincipal(physician_id.to_owned()));
        }
        t.treating.entry(patient_id.to_owned()).or_default().insert(physician_id.to_owned());
        Ok(())
    }

    pub fn is_treating(&self, physician_id: &str, patient_id: &str) -> bool {
        self.tables
            .read()
            .treating
            .get(patient_id)
            .is_some_and(|p| p.contains(physician_id))
    }

    fn log(&self, entry: AuditEntry) {
        if let Some(store) = &self.store {
            // audit persistence is best effort; the in-memory log is authoritative
            let _ = store.append("audit", &entry.line());
        }
        self.audit.lock().push(entry);
    }

    pub fn audit_log(&self) -> Vec<AuditEntry> {
        self.audit.lock().clone()
    }

    pub fn audit_len(&self) -> usize {
        self.audit.lock().len()
    }

    /// Entries from position `from` on.
    pub fn audit_since(&self, from: usize) -> Vec<AuditEntry> {
        self.audit.lock().get(from..).map(<[_]>::to_vec).unwrap_or_default()
    }

    pub fn audit_lines(&self) -> Vec<String> {
        self.audit.lock().iter().map(AuditEntry::line).collect()
    }

    fn scope_list(scopes: &BTreeSet<Scope>) -> String {
        scopes.iter().map(Scope::as_str).collect::<Vec<_>>().join(",")
    }

    /// Create or replace the grant for (patient, grantee). Only the patient
    /// may grant; a treating physician may grant the reports scope alone.
    pub fn grant(
        &self,
        caller: &str,
        patient_id: &str,
        grantee_id: &str,
        scopes: BTreeSet<Scope>,
        expires_at: Option<Timestamp>,
        now: Timestamp,
    ) -> Result<Grant, CollabError> {
        let mut t = self.tables.write();
        let audit = |result: &str| AuditEntry {
            at: now,
            op: "grant".into(),
            principal: caller.to_owned(),
            patient: patient_id.to_owned(),
            scope: Self::scope_list(&scopes),
            result: result.to_owned(),
        };
        let owner = caller == patient_id && t.principals.get(caller) == Some(&Role::Patient);
        let physician_reports = t.principals.get(caller) == Some(&Role::Physician)
            && t.treating.get(patient_id).is_some_and(|p| p.contains(caller))
            && !scopes.is_empty()
            && scopes.iter().all(|s| *s == Scope::Reports);
        if !owner && !physician_reports {
            drop(t);
            self.log(audit("denied:not_owner"));
            return Err(CollabError::NotOwner {
                caller: caller.to_owned(),
                patient: patient_id.to_owned(),
            });
        }
        if scopes.is_empty() {
            return Err(CollabError::EmptyScopes);
        }
        if !t.principals.contains_key(grantee_id) {
            return Err(CollabError::UnknownPrincipal(grantee_id.to_owned()));
        }
        if grantee_id == patient_id {
            return Err(CollabError::InvalidGrant("a patient cannot grant to themself".into()));
        }
        let grant = Grant {
            patient_id: patient_id.to_owned(),
            grantee_id: grantee_id.to_owned(),
            scopes: scopes.clone(),
            expires_at,
            granted_by: caller.to_owned(),
        };
        if let Some(store) = &self.store {
            store.put(&grant_key(patient_id, grantee_id), &serde_json::to_string(&grant)?)?;
        }
        t.grants.insert((patient_id.to_owned(), grantee_id.to_owned()), grant.clone());
        drop(t);
        self.log(audit(&format!("ok:{grantee_id}")));
        Ok(grant)
    }

    pub fn revoke(&self, caller: &str, patient_id: &str, grantee_id: &str, now: Timestamp) -> Result<(), CollabError> {
        let mut t = self.tables.write();
        let audit = |result: String| AuditEntry {
            at: now,
            op: "revoke".into(),
            principal: caller.to_owned(),
            patient: patient_id.to_owned(),
            scope: "-".into(),
            result,
        };
        let key = (patient_id.to_owned(), grantee_id.to_owned());
        let allowed = caller == patient_id
            || t.grants.get(&key).is_some_and(|g| g.granted_by == caller);
        if !allowed {
            drop(t);
            self.log(audit("denied:not_owner".into()));
            return Err(CollabError::NotOwner {
                caller: caller.to_owned(),
                patient: patient_id.to_owned(),
            });
        }
        if t.grants.remove(&key).is_none() {
            return Err(CollabError::NoSuchGrant {
                patient: patient_id.to_owned(),
                grantee: grantee_id.to_owned(),
            });
        }
        if let Some(store) = &self.store {
            store.put(&grant_key(patient_id, grantee_id), "")?;
        }
        drop(t);
        self.log(audit(format!("ok:{grantee_id}")));
        Ok(())
    }

    pub fn grants_for(&self, patient_id: &str) -> Vec<Grant> {
        self.tables
            .read()
            .grants
            .values()
            .filter(|g| g.patient_id == patient_id)
            .cloned()
            .collect()
    }

    fn audit_deny(&self, grantee: &str, patient: &str, scope: Scope, now: Timestamp, reason: DenyReason) {
        self.log(AuditEntry {
            at: now,
            op: "check".into(),
            principal: grantee.to_owned(),
            patient: patient.to_owned(),
            scope: scope.as_str().to_owned(),
            result: format!("deny:{}", reason.as_str()),
        });
    }

    pub fn check_access(&self, grantee_id: &str, patient_id: &str, scope: Scope, now: Timestamp) -> Decision {
        let decision = self.tables.read().decide(grantee_id, patient_id, scope, now);
        if let Decision::Deny(reason) = decision {
            self.audit_deny(grantee_id, patient_id, scope, now, reason);
        }
        decision
    }

    /// The access chokepoint: `read` runs only after an allow, and while the
    /// grant table is held, so no revoke can land between check and read.
    pub fn with_access<T>(
        &self,
        principal: &str,
        patient_id: &str,
        scope: Scope,
        now: Timestamp,
        read: impl FnOnce() -> T,
    ) -> Result<T, CollabError> {
        let tables = self.tables.read();
        match tables.decide(principal, patient_id, scope, now) {
            Decision::Allow(_) => Ok(read()),
            Decision::Deny(reason) => {
                drop(tables);
                self.audit_deny(principal, patient_id, scope, now, reason);
                Err(CollabError::Denied(reason))
            }
        }
    }

    /// The patient always gets an in-app intent; every grantee with an
    /// unexpired alerts grant gets a push intent.
    pub fn route_alert(&self, alert: &Alert, now: Timestamp) -> Vec<NotificationIntent> {
        let t = self.tables.read();
        let mut intents = vec![NotificationIntent {
            recipient_id: alert.patient_id.clone(),
            alert_id: alert.id.clone(),
            channel: Channel::InApp,
            created_at: now,
        }];
        for g in t.grants.values() {
            if g.patient_id == alert.patient_id && !g.expired(now) && g.scopes.contains(&Scope::Alerts) {
                intents.push(NotificationIntent {
                    recipient_id: g.grantee_id.clone(),
                    alert_id: alert.id.clone(),
                    channel: Channel::Push,
                    created_at: now,
                });
            }
        }
        intents
    }
}
