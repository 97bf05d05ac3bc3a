//! The shipped assessment question bank: two items per topic and level.

/// (id, topic, level, text, answer key)
pub(super) const QUESTIONS: &[(&str, &str, u8, &str, &str)] = &[
    ("gm-1a", "glucose_monitoring", 1, "Which device do you use to check your blood sugar at home? a) thermometer b) glucose meter c) scale d) blood pressure cuff", "choice:b"),
    ("gm-1b", "glucose_monitoring", 1, "True or false: you should wash and dry your hands before a finger-prick test.", "choice:true|t"),
    ("gm-2a", "glucose_monitoring", 2, "What is a usual fasting blood sugar target, in mmol/L? a) 2.0-3.0 b) 4.4-7.0 c) 10-14 d) 15-20", "choice:b"),
    ("gm-2b", "glucose_monitoring", 2, "Below what blood sugar level, in mmol/L, is a reading called low?", "range:3.5..4"),
    ("gm-3a", "glucose_monitoring", 3, "Your HbA1c reflects your average blood sugar over about how many months?", "range:2..3"),
    ("gm-3b", "glucose_monitoring", 3, "When is a reading two hours after a meal most useful? a) never b) to see how a meal affects you c) only when ill d) only at night", "choice:b"),
    ("diet-1a", "diet", 1, "Which drink is the best everyday choice? a) cola b) fruit juice c) water d) sweet tea", "choice:c"),
    ("diet-1b", "diet", 1, "True or false: people with diabetes must never eat fruit.", "choice:false|f"),
    ("diet-2a", "diet", 2, "How much of your plate should be non-starchy vegetables? a) none b) a quarter c) half d) all", "choice:c"),
    ("diet-2b", "diet", 2, "Which raises blood sugar fastest? a) brown rice b) lentils c) white rice congee d) broccoli", "choice:c"),
    ("diet-3a", "diet", 3, "Roughly how many grams of carbohydrate is one carbohydrate serving?", "range:10..15"),
    ("diet-3b", "diet", 3, "Why does a low glycaemic index food help? a) it has no calories b) it releases sugar slowly c) it replaces medicine d) it has no fibre", "choice:b"),
    ("med-1a", "medication", 1, "True or false: you can stop your diabetes tablets once your sugar looks normal.", "choice:false|f"),
    ("med-1b", "medication", 1, "What should you do if you are unsure about a dose? a) guess b) skip all doses c) ask your doctor or pharmacist d) double the next dose", "choice:c"),
    ("med-2a", "medication", 2, "Metformin is best taken: a) on an empty stomach at night b) with or after meals c) only when sugar is high d) once a month", "choice:b"),
    ("med-2b", "medication", 2, "If you miss a dose and it is almost time for the next one, you should: a) take two b) skip the missed one c) stop the medicine d) take it with alcohol", "choice:b"),
    ("med-3a", "medication", 3, "Which medicine type can cause low blood sugar? a) sulfonylurea b) statin c) vitamin D d) antacid", "choice:a"),
    ("med-3b", "medication", 3, "After opening, insulin pens can usually be kept at room temperature for about how many days?", "range:28..30"),
    ("comp-1a", "complications", 1, "Which part of the body should you check every day? a) hair b) feet c) ears d) elbows", "choice:b"),
    ("comp-1b", "complications", 1, "True or false: diabetes can damage the eyes.", "choice:true|t"),
    ("comp-2a", "complications", 2, "Numbness or tingling in the feet can be a sign of: a) nerve damage b) a cold c) strong bones d) good circulation", "choice:a"),
    ("comp-2b", "complications", 2, "How often should you have a dilated eye exam? a) every ten years b) about once a year c) never d) only if blind", "choice:b"),
    ("comp-3a", "complications", 3, "Which urine test finds early kidney damage? a) urine albumin b) urine colour c) urine smell d) urine volume", "choice:a"),
    ("comp-3b", "complications", 3, "What blood pressure, in mmHg systolic, is a common upper target with diabetes?", "range:130..140"),
    ("ex-1a", "exercise", 1, "True or false: regular walking helps lower blood sugar.", "choice:true|t"),
    ("ex-1b", "exercise", 1, "What should you carry when exercising if you take insulin? a) nothing b) a sugary snack c) salt tablets d) coffee", "choice:b"),
    ("ex-2a", "exercise", 2, "How many minutes of moderate activity per week are usually recommended?", "range:150..150"),
    ("ex-2b", "exercise", 2, "Which is a muscle-strengthening activity? a) resistance band exercises b) watching television c) napping d) reading", "choice:a"),
    ("ex-3a", "exercise", 3, "Above what blood sugar, in mmol/L, with ketones present, should you avoid exercise?", "range:13.9..16.7"),
    ("ex-3b", "exercise", 3, "Exercise can lower blood sugar for how long afterwards? a) minutes only b) up to a day c) never d) a month", "choice:b"),
    ("fu-1a", "follow_up", 1, "True or false: you should bring your glucose log to your appointment.", "choice:true|t"),
    ("fu-1b", "follow_up", 1, "Who can help you plan meals? a) a dietitian b) a dentist c) a plumber d) nobody", "choice:a"),
    ("fu-2a", "follow_up", 2, "How often is HbA1c usually checked when treatment is stable? a) daily b) every 6 months c) every 5 years d) never", "choice:b"),
    ("fu-2b", "follow_up", 2, "What should you tell your doctor at a follow-up visit? a) nothing b) any lows, new symptoms and missed doses c) only good news d) your neighbour's results", "choice:b"),
    ("fu-3a", "follow_up", 3, "How often is a foot examination by your care team advised, in times per year, at minimum?", "range:1..1"),
    ("fu-3b", "follow_up", 3, "A kidney function blood test mainly reports: a) eGFR b) heart rate c) body temperature d) eye pressure", "choice:a"),
];
