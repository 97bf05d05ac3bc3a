//! Dose slots, reminders, conversational prompts and adherence.

use std::collections::{BTreeMap, HashSet};

use chrono::{Duration, NaiveTime};
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use super::model::{GlucoseContext, MedicationSchedule};
use super::{RecordError, RecordsView};
use crate::time::{Timestamp, Window};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleConfig {
    pub reminder_window_min: u32,
}

impl Default for ScheduleConfig {
    fn default() -> Self {
        Self { reminder_window_min: 15 }
    }
}

/// One scheduled dose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoseSlot {
    pub med_name: String,
    pub at: Timestamp,
    pub dose: String,
    pub purpose: String,
}

/// Every slot inside `window` produced by the active schedule versions.
/// Sorted by time, then medication name.
pub fn scheduled_slots(versions: &[MedicationSchedule], window: Window) -> Vec<DoseSlot> {
    let mut by_med: BTreeMap<&str, Vec<&MedicationSchedule>> = BTreeMap::new();
    for v in versions {
        by_med.entry(&v.med_name).or_default().push(v);
    }
    let mut slots = Vec::new();
    for versions in by_med.values_mut() {
        versions.sort_by_key(|v| v.effective_from);
        for (i, v) in versions.iter().enumerate() {
            if !v.active {
                continue;
            }
            let until = versions.get(i + 1).map(|n| n.effective_from);
            let from = v.effective_from.max(window.start);
            let to = until.map_or(window.end, |u| u.min(window.end));
            if from >= to {
                continue;
            }
            let mut day = from.date();
            while day <= to.date() {
                for t in &v.times_of_day {
                    let at = day.and_time(*t);
                    if at >= from && at < to {
                        slots.push(DoseSlot {
                            med_name: v.med_name.clone(),
                            at,
                            dose: v.dose.clone(),
                            purpose: v.purpose.clone(),
                        });
                    }
                }
                day = day.succ_opt().expect("date in range");
            }
        }
    }
    slots.sort_by(|a, b| a.at.cmp(&b.at).then_with(|| a.med_name.cmp(&b.med_name)));
    slots
}

/// Taken events over scheduled slots in `window`. Slots are the schedule
/// slots plus any recorded event's slot; zero slots counts as full
/// adherence.
pub fn adherence(view: &RecordsView, patient_id: &str, window: Window) -> Result<f64, RecordError> {
    let versions: Vec<MedicationSchedule> = view.schedules(patient_id)?.into_iter().map(|s| s.entry).collect();
    let mut slots: HashSet<(String, Timestamp)> = scheduled_slots(&versions, window)
        .into_iter()
        .map(|s| (s.med_name, s.at))
        .collect();
    let mut taken = 0usize;
    for ev in view.medication_events(patient_id)? {
        let ev = ev.entry;
        if !window.contains(&ev.scheduled_at) {
            continue;
        }
        if ev.is_taken() {
            taken += 1;
        }
        slots.insert((ev.med_name, ev.scheduled_at));
    }
    if slots.is_empty() {
        return Ok(1.0);
    }
    Ok(taken as f64 / slots.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reminder {
    pub patient_id: String,
    pub med_name: String,
    pub dose: String,
    pub purpose: String,
    pub scheduled_at: Timestamp,
    pub message: String,
}

/// Reminders for slots in `[now, now + window)` that have no medication
/// event yet.
pub fn due_reminders(
    view: &RecordsView,
    patient_id: &str,
    now: Timestamp,
    config: &ScheduleConfig,
) -> Result<Vec<Reminder>, RecordError> {
    let versions: Vec<MedicationSchedule> = view.schedules(patient_id)?.into_iter().map(|s| s.entry).collect();
    let window = Window::new(now, now + Duration::minutes(i64::from(config.reminder_window_min)));
    let recorded: HashSet<(String, Timestamp)> = view
        .medication_events(patient_id)?
        .into_iter()
        .map(|e| (e.entry.med_name, e.entry.scheduled_at))
        .collect();
    Ok(scheduled_slots(&versions, window)
        .into_iter()
        .filter(|s| !recorded.contains(&(s.med_name.clone(), s.at)))
        .map(|s| Reminder {
            patient_id: patient_id.to_owned(),
            message: format!(
                "Time to take {} ({}) at {}. It {}.",
                s.med_name,
                s.dose,
                s.at.format("%H:%M"),
                s.purpose
            ),
            med_name: s.med_name,
            dose: s.dose,
            purpose: s.purpose,
            scheduled_at: s.at,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PromptKind {
    Sleep,
    PostMealGlucose { meal: NaiveTime },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prompt {
    pub patient_id: String,
    pub kind: PromptKind,
    /// Identifies the (day, window) the prompt belongs to; a prompt fires at
    /// most once per key.
    pub window_key: String,
    pub message: String,
}

fn morning_window() -> (NaiveTime, NaiveTime) {
    (
        NaiveTime::from_hms_opt(6, 0, 0).expect("static"),
        NaiveTime::from_hms_opt(10, 0, 0).expect("static"),
    )
}

/// Conversational prompts due at `now`:
/// - 06:00 to 10:00, a sleep question unless today's sleep is logged;
/// - 30 to 90 min after each mealtime, a post-meal glucose question unless
///   a postprandial reading was taken in that window.
pub fn due_prompts(view: &RecordsView, patient_id: &str, now: Timestamp) -> Result<Vec<Prompt>, RecordError> {
    let mut prompts = Vec::new();
    let today = now.date();
    let (m_start, m_end) = morning_window();
    if now.time() >= m_start && now.time() < m_end {
        let logged = view.sleep(patient_id)?.iter().any(|s| s.entry.at.date() == today);
        if !logged {
            prompts.push(Prompt {
                patient_id: patient_id.to_owned(),
                kind: PromptKind::Sleep,
                window_key: format!("{patient_id}/sleep/{today}"),
                message: "Good morning! How did you sleep last night?".into(),
            });
        }
    }
    let readings = view.glucose(patient_id)?;
    for meal in view.meal_times(patient_id)? {
        let meal_at = today.and_time(meal);
        let window = Window::new(meal_at + Duration::minutes(30), meal_at + Duration::minutes(90));
        if !window.contains(&now) {
            continue;
        }
        let measured = readings
            .iter()
            .any(|r| r.entry.context == GlucoseContext::Postprandial && window.contains(&r.entry.taken_at));
        if !measured {
            prompts.push(Prompt {
                patient_id: patient_id.to_owned(),
                kind: PromptKind::PostMealGlucose { meal },
                window_key: format!("{patient_id}/meal/{today}/{}", meal.format("%H:%M")),
                message: "Have you measured your blood sugar after the meal?".into(),
            });
        }
    }
    Ok(prompts)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Notification {
    Reminder(Reminder),
    Prompt(Prompt),
}

/// Fires each reminder and prompt once, however often or concurrently it
/// is ticked.
#[derive(Debug, Default)]
pub struct ReminderScheduler {
    fired: Mutex<HashSet<String>>,
}

impl ReminderScheduler {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tick(
        &self,
        view: &RecordsView,
        patient_id: &str,
        now: Timestamp,
        config: &ScheduleConfig,
    ) -> Result<Vec<Notification>, RecordError> {
        let reminders = due_reminders(view, patient_id, now, config)?;
        let prompts = due_prompts(view, patient_id, now)?;
        let mut fired = self.fired.lock();
        let mut out = Vec::new();
        for r in reminders {
            let key = format!("{patient_id}/dose/{}/{}", r.med_name, r.scheduled_at);
            if fired.insert(key) {
                out.push(Notification::Reminder(r));
            }
        }
        for p in prompts {
            if fired.insert(p.window_key.clone()) {
                out.push(Notification::Prompt(p));
            }
        }
        Ok(out)
    }
}
