//! Term families expanded from compact tables: foods by glycaemic class,
//! activities by intensity, laboratory tests, tablet strengths, fixed-dose
//! combinations, symptom sites and mealtime readings.

use crate::knowledge::{Category, Relation, TermEdge, TermNode};

pub(super) const DEVICES: &[super::seeds::Seed] = &[
    ("insulin_pen", "insulin pen", &["pen injector"], "procedure", "A pen-shaped device pre-filled with insulin. You dial the dose and inject through a small needle."),
    ("pen_needle", "pen needle", &[], "procedure", "The small disposable needle screwed onto an insulin pen. Use a new one each time."),
    ("lancet", "lancet", &[], "procedure", "A tiny sterile blade used to prick the finger for a blood sugar test."),
    ("lancing_device", "lancing device", &["finger pricker"], "procedure", "A spring-loaded holder for the lancet that makes finger pricks quicker and less painful."),
    ("glucose_meter", "glucose meter", &["glucometer", "blood sugar meter"], "procedure", "A hand-held device that reads the sugar level in a drop of blood."),
    ("test_strips", "test strips", &["glucose test strips"], "procedure", "Single-use strips that take the drop of blood into the glucose meter."),
    ("sharps_container", "sharps container", &["sharps bin"], "procedure", "A hard box for used needles and lancets so nobody gets hurt."),
    ("insulin_vial", "insulin vial", &[], "procedure", "A small bottle of insulin drawn up with a syringe."),
    ("insulin_syringe", "insulin syringe", &[], "procedure", "A syringe marked in insulin units for drawing doses from a vial."),
    ("glucose_tablets", "glucose tablets", &["dextrose tablets"], "procedure", "Chewable tablets of pure sugar for treating a low quickly."),
    ("medical_id", "medical alert bracelet", &["medical ID bracelet"], "procedure", "A bracelet that tells others you have diabetes if you cannot speak for yourself."),
    ("bp_monitor", "home blood pressure monitor", &["blood pressure cuff"], "procedure", "A cuff you use at home to check blood pressure between visits."),
    ("bathroom_scale", "bathroom scale", &[], "procedure", "Weighing yourself at the same time each week helps track weight changes."),
    ("insulin_cooler", "insulin cooler bag", &["insulin travel case"], "procedure", "A cool bag that keeps insulin from getting too hot when you travel."),
    ("cgm_sensor", "CGM sensor", &[], "procedure", "The small patch worn on the arm or belly that measures sugar for a continuous monitor."),
];

#[derive(Clone, Copy)]
enum Gi {
    Low,
    Medium,
    High,
}

const FOODS: &[(&str, Gi)] = &[
    ("lentils", Gi::Low),
    ("chickpeas", Gi::Low),
    ("kidney beans", Gi::Low),
    ("black beans", Gi::Low),
    ("soybeans", Gi::Low),
    ("tofu", Gi::Low),
    ("soy milk", Gi::Low),
    ("edamame", Gi::Low),
    ("green peas", Gi::Low),
    ("barley", Gi::Low),
    ("buckwheat", Gi::Low),
    ("rolled oats", Gi::Low),
    ("bran cereal", Gi::Low),
    ("whole-wheat pasta", Gi::Low),
    ("milk", Gi::Low),
    ("plain yogurt", Gi::Low),
    ("cheese", Gi::Low),
    ("eggs", Gi::Low),
    ("chicken breast", Gi::Low),
    ("fish", Gi::Low),
    ("salmon", Gi::Low),
    ("shrimp", Gi::Low),
    ("lean beef", Gi::Low),
    ("pork loin", Gi::Low),
    ("peanuts", Gi::Low),
    ("almonds", Gi::Low),
    ("walnuts", Gi::Low),
    ("cashews", Gi::Low),
    ("chia seeds", Gi::Low),
    ("flaxseed", Gi::Low),
    ("olive oil", Gi::Low),
    ("avocado", Gi::Low),
    ("broccoli", Gi::Low),
    ("spinach", Gi::Low),
    ("cabbage", Gi::Low),
    ("bok choy", Gi::Low),
    ("lettuce", Gi::Low),
    ("cucumber", Gi::Low),
    ("tomato", Gi::Low),
    ("carrot", Gi::Low),
    ("green beans", Gi::Low),
    ("cauliflower", Gi::Low),
    ("eggplant", Gi::Low),
    ("zucchini", Gi::Low),
    ("bitter melon", Gi::Low),
    ("celery", Gi::Low),
    ("mushrooms", Gi::Low),
    ("onion", Gi::Low),
    ("garlic", Gi::Low),
    ("bell pepper", Gi::Low),
    ("asparagus", Gi::Low),
    ("kale", Gi::Low),
    ("seaweed", Gi::Low),
    ("orange", Gi::Low),
    ("pear", Gi::Low),
    ("peach", Gi::Low),
    ("plum", Gi::Low),
    ("cherries", Gi::Low),
    ("strawberries", Gi::Low),
    ("blueberries", Gi::Low),
    ("raspberries", Gi::Low),
    ("grapefruit", Gi::Low),
    ("kiwifruit", Gi::Low),
    ("apricot", Gi::Low),
    ("pomelo", Gi::Low),
    ("hummus", Gi::Low),
    ("mung beans", Gi::Low),
    ("dark chocolate", Gi::Medium),
    ("basmati rice", Gi::Medium),
    ("sweet potato", Gi::Medium),
    ("sweet corn", Gi::Medium),
    ("whole-wheat bread", Gi::Medium),
    ("rye bread", Gi::Medium),
    ("couscous", Gi::Medium),
    ("quinoa", Gi::Medium),
    ("pineapple", Gi::Medium),
    ("mango", Gi::Medium),
    ("papaya", Gi::Medium),
    ("raisins", Gi::Medium),
    ("honey", Gi::Medium),
    ("taro", Gi::Medium),
    ("yam", Gi::Medium),
    ("soba noodles", Gi::Medium),
    ("brown bread", Gi::Medium),
    ("popcorn", Gi::Medium),
    ("rice noodles", Gi::Medium),
    ("dumplings", Gi::Medium),
    ("pita bread", Gi::Medium),
    ("sourdough bread", Gi::Medium),
    ("ice cream", Gi::Medium),
    ("granola", Gi::Medium),
    ("lychee", Gi::Medium),
    ("white bread", Gi::High),
    ("baguette", Gi::High),
    ("bagel", Gi::High),
    ("cornflakes", Gi::High),
    ("instant oatmeal", Gi::High),
    ("puffed rice", Gi::High),
    ("rice cakes", Gi::High),
    ("potato", Gi::High),
    ("mashed potatoes", Gi::High),
    ("french fries", Gi::High),
    ("glutinous rice", Gi::High),
    ("sticky rice cake", Gi::High),
    ("mooncake", Gi::High),
    ("fried dough stick", Gi::High),
    ("crackers", Gi::High),
    ("pretzels", Gi::High),
    ("doughnut", Gi::High),
    ("cake", Gi::High),
    ("cookies", Gi::High),
    ("dates", Gi::High),
    ("sports drinks", Gi::High),
    ("table sugar", Gi::High),
    ("pumpkin", Gi::High),
    ("instant noodles", Gi::High),
    ("pancakes", Gi::High),
    ("waffles", Gi::High),
    ("croissant", Gi::High),
    ("muffin", Gi::High),
    ("jam", Gi::High),
];

fn food_explanation(gi: Gi) -> &'static str {
    match gi {
        Gi::Low => "A low glycaemic index food. It raises blood sugar slowly and is a good everyday choice in sensible portions.",
        Gi::Medium => "A medium glycaemic index food. Keep the portion small and eat it with vegetables or protein.",
        Gi::High => "A high glycaemic index food. It raises blood sugar quickly, so have it rarely and in small amounts.",
    }
}

#[derive(Clone, Copy)]
enum Intensity {
    Light,
    Moderate,
    Vigorous,
}

const ACTIVITIES: &[(&str, Intensity)] = &[
    ("gardening", Intensity::Light),
    ("housework", Intensity::Light),
    ("stretching", Intensity::Light),
    ("yoga", Intensity::Light),
    ("qigong", Intensity::Light),
    ("ba duan jin", Intensity::Light),
    ("bowling", Intensity::Light),
    ("golf", Intensity::Light),
    ("balance exercises", Intensity::Light),
    ("chair exercises", Intensity::Light),
    ("pilates", Intensity::Light),
    ("square dancing", Intensity::Moderate),
    ("ballroom dancing", Intensity::Moderate),
    ("stair climbing", Intensity::Moderate),
    ("hiking", Intensity::Moderate),
    ("water aerobics", Intensity::Moderate),
    ("badminton", Intensity::Moderate),
    ("table tennis", Intensity::Moderate),
    ("volleyball", Intensity::Moderate),
    ("stationary cycling", Intensity::Moderate),
    ("elliptical training", Intensity::Moderate),
    ("resistance band exercises", Intensity::Moderate),
    ("squats", Intensity::Moderate),
    ("push-ups", Intensity::Moderate),
    ("weight lifting", Intensity::Moderate),
    ("nordic walking", Intensity::Moderate),
    ("martial arts", Intensity::Moderate),
    ("jogging", Intensity::Vigorous),
    ("running", Intensity::Vigorous),
    ("rowing", Intensity::Vigorous),
    ("aerobics", Intensity::Vigorous),
    ("tennis", Intensity::Vigorous),
    ("basketball", Intensity::Vigorous),
    ("football", Intensity::Vigorous),
    ("skipping rope", Intensity::Vigorous),
    ("mountain climbing", Intensity::Vigorous),
];

fn activity_explanation(i: Intensity) -> &'static str {
    match i {
        Intensity::Light => "A light activity. It gently lowers blood sugar and suits most people, including older adults.",
        Intensity::Moderate => "A moderate activity. Aim for about 150 minutes of moderate activity spread across the week.",
        Intensity::Vigorous => "A vigorous activity. Check your blood sugar before and after, and carry a sugary snack in case it drops.",
    }
}

/// (canonical, aliases, what it measures)
const LABS: &[(&str, &[&str], &str)] = &[
    ("serum sodium", &[], "the salt balance of your blood"),
    ("serum potassium", &[], "potassium, which some blood pressure and kidney medicines change"),
    ("serum calcium", &[], "calcium, needed for bones, nerves and muscles"),
    ("serum magnesium", &[], "magnesium, which can run low with diabetes"),
    ("serum phosphate", &[], "phosphate, which rises when the kidneys struggle"),
    ("blood urea nitrogen", &["BUN"], "a waste product the kidneys clear"),
    ("alanine aminotransferase", &["ALT"], "a liver enzyme that rises with liver strain or fatty liver"),
    ("aspartate aminotransferase", &["AST"], "an enzyme from the liver and muscles"),
    ("alkaline phosphatase", &[], "an enzyme from the liver and bones"),
    ("gamma-glutamyl transferase", &["GGT"], "a liver enzyme that rises with alcohol and fatty liver"),
    ("total bilirubin", &["bilirubin"], "a yellow pigment cleared by the liver"),
    ("serum albumin", &[], "the main protein in blood, made by the liver"),
    ("hemoglobin", &["haemoglobin"], "the oxygen-carrying protein in red blood cells"),
    ("hematocrit", &[], "how much of your blood is red cells"),
    ("white blood cell count", &["WBC"], "the cells that fight infection"),
    ("platelet count", &[], "the cells that help blood clot"),
    ("thyroid-stimulating hormone", &["TSH"], "how hard the body is driving the thyroid gland"),
    ("free thyroxine", &["free T4"], "the main thyroid hormone"),
    ("vitamin B12", &[], "a vitamin that long-term metformin use can lower"),
    ("vitamin D", &[], "a vitamin needed for strong bones"),
    ("ferritin", &[], "the body's iron stores"),
    ("C-reactive protein", &["CRP"], "inflammation in the body"),
    ("fasting insulin", &[], "how much insulin the body makes before eating"),
    ("fructosamine", &[], "average blood sugar over the past two to three weeks"),
    ("glycated albumin", &[], "average blood sugar over the past few weeks"),
    ("blood lactate", &["lactic acid"], "lactic acid, which very rarely builds up with metformin"),
    ("urine glucose", &["sugar in the urine"], "sugar spilling into the urine"),
    ("urine ketones", &[], "ketones passed in the urine"),
    ("urine protein", &["proteinuria"], "protein leaking into the urine, an early kidney warning"),
    ("apolipoprotein B", &["apoB"], "the number of cholesterol-carrying particles"),
    ("non-HDL cholesterol", &[], "all the cholesterol that can clog arteries"),
    ("cystatin C", &[], "kidney filtering, alongside creatinine"),
    ("beta-hydroxybutyrate", &[], "the main ketone in blood"),
    ("GAD antibodies", &["anti-GAD"], "antibodies that point to autoimmune diabetes"),
    ("creatine kinase", &["CK"], "muscle damage, sometimes checked when muscles ache on a statin"),
    ("blood osmolality", &[], "how concentrated the blood is, which rises with very high sugar"),
    ("anion gap", &[], "acids in the blood, used when ketoacidosis is suspected"),
];

/// Common tablet strengths in mg per seed drug.
const STRENGTHS: &[(&str, &[&str])] = &[
    ("metformin", &["500", "850", "1000"]),
    ("gliclazide", &["30", "60", "80"]),
    ("glimepiride", &["1", "2", "4"]),
    ("glipizide", &["5", "10"]),
    ("sitagliptin", &["25", "50", "100"]),
    ("linagliptin", &["5"]),
    ("saxagliptin", &["2.5", "5"]),
    ("alogliptin", &["25"]),
    ("vildagliptin", &["50"]),
    ("dapagliflozin", &["5", "10"]),
    ("empagliflozin", &["10", "25"]),
    ("canagliflozin", &["100", "300"]),
    ("pioglitazone", &["15", "30", "45"]),
    ("acarbose", &["50", "100"]),
    ("repaglinide", &["0.5", "1", "2"]),
    ("atorvastatin", &["10", "20", "40"]),
    ("rosuvastatin", &["5", "10", "20"]),
    ("amlodipine", &["5", "10"]),
    ("losartan", &["50", "100"]),
    ("aspirin", &["100"]),
];

const COMBINATIONS: &[(&str, &str)] = &[
    ("metformin", "sitagliptin"),
    ("metformin", "saxagliptin"),
    ("metformin", "linagliptin"),
    ("metformin", "alogliptin"),
    ("metformin", "vildagliptin"),
    ("metformin", "dapagliflozin"),
    ("metformin", "empagliflozin"),
    ("metformin", "canagliflozin"),
    ("metformin", "pioglitazone"),
    ("metformin", "glipizide"),
    ("metformin", "glibenclamide"),
    ("metformin", "glimepiride"),
    ("metformin", "repaglinide"),
    ("empagliflozin", "linagliptin"),
    ("dapagliflozin", "saxagliptin"),
    ("alogliptin", "pioglitazone"),
    ("insulin_degludec", "liraglutide"),
];

/// (id part, phrase, explanation prefix, linked condition)
const SENSATIONS: &[(&str, &str, &str, &str)] = &[
    ("numbness", "numbness", "Loss of feeling", "neuropathy"),
    ("tingling", "tingling", "Pins and needles", "neuropathy"),
    ("burning", "burning pain", "A burning pain", "neuropathy"),
    ("weakness", "weakness", "Weakness", "neuropathy"),
    ("swelling", "swelling", "Swelling", "heart_failure"),
    ("coldness", "coldness", "Coldness", "pad"),
    ("cramps", "cramps", "Cramping", "pad"),
];

const SITES: &[(&str, &str)] = &[("feet", "feet"), ("toes", "toes"), ("hands", "hands"), ("fingers", "fingers"), ("legs", "legs")];

const MEAL_SLOTS: &[(&str, &str, &str)] = &[
    ("before_breakfast", "before breakfast", "pre-breakfast"),
    ("after_breakfast", "after breakfast", "post-breakfast"),
    ("before_lunch", "before lunch", "pre-lunch"),
    ("after_lunch", "after lunch", "post-lunch"),
    ("before_dinner", "before dinner", "pre-dinner"),
    ("after_dinner", "after dinner", "post-dinner"),
    ("bedtime", "at bedtime", "bedtime"),
    ("overnight", "overnight", "night-time"),
];

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_owned()
}

pub(super) struct Derived {
    pub nodes: Vec<TermNode>,
    pub edges: Vec<TermEdge>,
}

/// `name_of(id)` resolves seed ids to canonical names.
pub(super) fn derive(name_of: impl Fn(&str) -> String) -> Derived {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for (name, gi) in FOODS {
        let id = format!("food_{}", slug(name));
        nodes.push(TermNode::new(&id, *name, Category::Lifestyle, food_explanation(*gi)));
        edges.push(TermEdge::new(id, Relation::RelatedTo, "glycemic_index"));
    }
    for (name, intensity) in ACTIVITIES {
        let id = format!("act_{}", slug(name));
        nodes.push(TermNode::new(&id, *name, Category::Lifestyle, activity_explanation(*intensity)));
        let anchor = match intensity {
            Intensity::Light => "walking",
            Intensity::Moderate => "brisk_walking",
            Intensity::Vigorous => "hypoglycemia",
        };
        edges.push(TermEdge::new(id, Relation::RelatedTo, anchor));
    }
    for (name, aliases, what) in LABS {
        let id = format!("lab_{}", slug(name));
        nodes.push(
            TermNode::new(&id, *name, Category::Metric, format!("A laboratory test of {what}."))
                .with_surface_forms(aliases.iter().copied()),
        );
        edges.push(TermEdge::new(id, Relation::RelatedTo, "follow_up_visit"));
    }
    for (drug, strengths) in STRENGTHS {
        let drug_name = name_of(drug);
        for s in *strengths {
            let id = format!("{drug}_{}mg", s.replace('.', "_"));
            nodes.push(
                TermNode::new(
                    &id,
                    format!("{drug_name} {s} mg"),
                    Category::Drug,
                    format!("One {drug_name} tablet containing {s} mg. Take the strength written on your prescription."),
                )
                .with_surface_forms([format!("{drug_name} {s}mg")]),
            );
            edges.push(TermEdge::new(id, Relation::SubtypeOf, *drug));
        }
    }
    for (a, b) in COMBINATIONS {
        let (na, nb) = (name_of(a), name_of(b));
        let id = format!("combo_{a}_{b}");
        nodes.push(
            TermNode::new(
                &id,
                format!("{na}/{nb}"),
                Category::Drug,
                format!("One product that combines {na} and {nb}, so there is one less medicine to take. The side effects of both still apply."),
            )
            .with_surface_forms([format!("{nb}/{na}"), format!("{na} and {nb}")]),
        );
        edges.push(TermEdge::new(&id, Relation::RelatedTo, *a));
        edges.push(TermEdge::new(id, Relation::RelatedTo, *b));
    }
    for (key, phrase, lead, condition) in SENSATIONS {
        for (site_key, site) in SITES {
            let id = format!("sym_{key}_{site_key}");
            nodes.push(
                TermNode::new(
                    &id,
                    format!("{phrase} in the {site}"),
                    Category::Symptom,
                    format!("{lead} in the {site}. With diabetes it can point to nerve or circulation problems, so mention it at your next visit."),
                )
                .with_surface_forms([format!("{phrase} in {site}")]),
            );
            edges.push(TermEdge::new(id, Relation::SymptomOf, *condition));
        }
    }
    for (key, phrase, short) in MEAL_SLOTS {
        let id = format!("bg_{key}");
        nodes.push(
            TermNode::new(
                &id,
                format!("blood glucose {phrase}"),
                Category::Metric,
                format!("Your blood sugar reading {phrase}. Comparing it over days shows how meals, medicine and sleep affect you."),
            )
            .with_surface_forms([format!("{short} glucose")]),
        );
        edges.push(TermEdge::new(id, Relation::Measures, "blood_glucose"));
    }
    Derived { nodes, edges }
}
