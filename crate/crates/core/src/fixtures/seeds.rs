//! Hand-written seed terms for the shipped diabetes knowledge graph.
//!
//! Row format: (id, canonical, extra surface forms, category, explanation).

pub(super) type Seed = (&'static str, &'static str, &'static [&'static str], &'static str, &'static str);

pub(super) const CONDITIONS: &[Seed] = &[
    ("diabetes", "diabetes mellitus", &["diabetes", "sugar diabetes"], "condition", "A long-term condition where the body cannot keep blood sugar in a healthy range."),
    ("t2dm", "type 2 diabetes mellitus", &["type 2 diabetes", "T2DM", "type II diabetes", "adult-onset diabetes", "2型糖尿病"], "condition", "The most common kind of diabetes. The body still makes insulin but does not use it well, so sugar builds up in the blood."),
    ("t1dm", "type 1 diabetes mellitus", &["type 1 diabetes", "T1DM", "juvenile diabetes"], "condition", "A kind of diabetes where the body stops making insulin, so insulin must be injected every day."),
    ("prediabetes", "prediabetes", &["borderline diabetes", "impaired glucose tolerance"], "condition", "Blood sugar is higher than normal but not yet high enough to be called diabetes. Lifestyle changes can often turn it back."),
    ("gestational_diabetes", "gestational diabetes", &["pregnancy diabetes"], "condition", "High blood sugar that starts during pregnancy and usually goes away after the baby is born."),
    ("hypoglycemia", "hypoglycemia", &["low blood sugar", "hypo", "低血糖"], "condition", "Blood sugar that has dropped too low, usually below 3.9 mmol/L. Eat or drink something sugary right away."),
    ("hyperglycemia", "hyperglycemia", &["high blood sugar", "hyper"], "condition", "Blood sugar that is higher than your target. Over time it damages blood vessels and nerves."),
    ("insulin_resistance", "insulin resistance", &[], "condition", "The body's cells do not respond well to insulin, so more insulin is needed to move sugar out of the blood."),
    ("hypertension", "hypertension", &["high blood pressure"], "condition", "Blood pressure that stays too high. It strains the heart and kidneys, especially together with diabetes."),
    ("hyperlipidemia", "hyperlipidemia", &["high cholesterol"], "condition", "Too much fat, such as cholesterol, in the blood. It can clog blood vessels."),
    ("dyslipidemia", "dyslipidemia", &["abnormal blood lipids"], "condition", "An unhealthy balance of blood fats, often high bad cholesterol and low good cholesterol."),
    ("obesity", "obesity", &["severe overweight"], "condition", "Carrying a lot of extra body fat, which makes blood sugar harder to control."),
    ("metabolic_syndrome", "metabolic syndrome", &[], "condition", "A group of problems together: belly fat, high blood pressure, high blood sugar and unhealthy blood fats."),
    ("retinopathy", "diabetic retinopathy", &["retinopathy", "diabetic eye disease"], "condition", "Damage to the back of the eye caused by high blood sugar. It can lead to vision loss if not treated early."),
    ("macular_edema", "diabetic macular edema", &["macular edema"], "condition", "Swelling in the centre of the retina that blurs the middle of your vision."),
    ("nephropathy", "diabetic nephropathy", &["diabetic kidney disease", "nephropathy"], "condition", "Kidney damage caused by diabetes. Early on it has no symptoms and is found with urine tests."),
    ("neuropathy", "diabetic neuropathy", &["nerve damage", "neuropathy"], "condition", "Nerve damage from high blood sugar, often felt as numbness, tingling or pain in the feet."),
    ("foot_ulcer", "diabetic foot ulcer", &["foot ulcer", "diabetic foot"], "condition", "An open sore on the foot that heals slowly and can become infected. Check your feet every day."),
    ("ckd", "chronic kidney disease", &["CKD", "kidney failure"], "condition", "The kidneys slowly lose their ability to clean the blood."),
    ("cad", "coronary heart disease", &["coronary artery disease", "heart disease"], "condition", "Narrowed blood vessels that supply the heart. Diabetes makes it more likely."),
    ("atherosclerosis", "coronary atherosclerosis", &["atherosclerosis", "hardening of the arteries"], "condition", "Fatty deposits build up inside the artery walls and narrow them."),
    ("stroke", "stroke", &["brain attack"], "condition", "Blood flow to part of the brain is blocked or a vessel bursts. Call for help immediately."),
    ("pad", "peripheral arterial disease", &["PAD", "poor leg circulation"], "condition", "Narrowed arteries in the legs that cause pain when walking and slow healing of foot wounds."),
    ("heart_failure", "heart failure", &[], "condition", "The heart does not pump as strongly as it should, causing tiredness and swollen ankles."),
    ("dka", "diabetic ketoacidosis", &["DKA", "ketoacidosis"], "condition", "A dangerous build-up of acids in the blood when the body lacks insulin. It needs emergency care."),
    ("hhs", "hyperosmolar hyperglycemic state", &["HHS"], "condition", "Extremely high blood sugar with severe dehydration, mostly in older people with type 2 diabetes. It is an emergency."),
    ("fatty_liver", "fatty liver disease", &["fatty liver", "NAFLD"], "condition", "Extra fat stored in the liver, common with overweight and type 2 diabetes."),
    ("periodontitis", "periodontitis", &["gum disease"], "condition", "Infection of the gums. High blood sugar makes gum problems more common."),
    ("gastroparesis", "gastroparesis", &["slow stomach emptying"], "condition", "Nerve damage makes the stomach empty slowly, causing bloating and unpredictable blood sugar."),
    ("cataract", "cataract", &[], "condition", "Clouding of the lens of the eye that makes vision blurry. It appears earlier in people with diabetes."),
    ("glaucoma", "glaucoma", &[], "condition", "Raised pressure inside the eye that can damage the optic nerve."),
    ("depression", "depression", &["low mood"], "condition", "Feeling down or losing interest for a long time. It is common with diabetes and can be treated."),
    ("sleep_apnea", "obstructive sleep apnea", &["sleep apnea", "sleep apnoea"], "condition", "Breathing stops and starts during sleep, often with loud snoring. It worsens blood sugar control."),
    ("uti", "urinary tract infection", &["UTI", "bladder infection"], "condition", "An infection in the bladder or urinary tract. Sugar in the urine makes it more likely."),
    ("frozen_shoulder", "frozen shoulder", &["adhesive capsulitis"], "condition", "A stiff, painful shoulder that is more common in people with diabetes."),
    ("carpal_tunnel", "carpal tunnel syndrome", &[], "condition", "A squeezed nerve in the wrist causing numb or tingling fingers."),
    ("gout", "gout", &[], "condition", "Painful swelling of a joint caused by uric acid crystals."),
    ("osteoporosis", "osteoporosis", &["brittle bones"], "condition", "Bones become thin and break more easily."),
    ("erectile_dysfunction", "erectile dysfunction", &["ED"], "condition", "Trouble getting or keeping an erection. Nerve and blood vessel damage from diabetes can cause it."),
    ("acanthosis", "acanthosis nigricans", &["dark skin patches"], "condition", "Dark, velvety patches of skin, often on the neck, linked with insulin resistance."),
];

pub(super) const DRUG_CLASSES: &[Seed] = &[
    ("biguanide", "biguanide", &["biguanides"], "drug", "A family of diabetes tablets that reduce the sugar the liver releases. Metformin is the main one."),
    ("sulfonylurea", "sulfonylurea", &["sulfonylureas", "sulphonylurea"], "drug", "Tablets that push the pancreas to release more insulin. They can cause low blood sugar."),
    ("dpp4", "DPP-4 inhibitor", &["DPP-4 inhibitors", "gliptin"], "drug", "Tablets that help the body release insulin after meals and rarely cause low blood sugar."),
    ("sglt2", "SGLT2 inhibitor", &["SGLT2 inhibitors", "gliflozin"], "drug", "Tablets that make the kidneys pass extra sugar out in the urine. They also protect the heart and kidneys."),
    ("glp1", "GLP-1 receptor agonist", &["GLP-1 agonist", "GLP-1 injection"], "drug", "Injections that help insulin work after meals, slow the stomach and reduce appetite."),
    ("tzd", "thiazolidinedione", &["glitazone"], "drug", "Tablets that make the body more sensitive to insulin. They can cause fluid retention."),
    ("agi", "alpha-glucosidase inhibitor", &["starch blocker"], "drug", "Tablets taken with the first bite of a meal that slow how fast starch turns into sugar."),
    ("meglitinide", "meglitinide", &["glinide"], "drug", "Short-acting tablets taken before meals to boost insulin release."),
    ("basal_insulin", "basal insulin", &["long-acting insulin", "background insulin"], "drug", "Insulin that works slowly over a whole day to keep blood sugar steady between meals and overnight."),
    ("bolus_insulin", "bolus insulin", &["mealtime insulin", "rapid-acting insulin"], "drug", "Fast insulin taken just before a meal to handle the sugar from that meal."),
    ("premixed_insulin", "premixed insulin", &["mixed insulin"], "drug", "A ready-made mixture of fast and slow insulin, usually injected twice a day."),
    ("insulin", "insulin", &["胰岛素"], "drug", "A hormone that moves sugar from the blood into the body's cells. As a medicine it is given by injection."),
    ("statin", "statin", &["statins", "cholesterol tablet"], "drug", "Tablets that lower cholesterol and protect the heart and blood vessels."),
    ("ace_inhibitor", "ACE inhibitor", &["ACE inhibitors"], "drug", "Blood pressure tablets that also help protect the kidneys."),
    ("arb", "angiotensin receptor blocker", &["ARB"], "drug", "Blood pressure tablets that also help protect the kidneys, often used if ACE inhibitors cause a cough."),
];

pub(super) const DRUGS: &[Seed] = &[
    ("metformin", "metformin", &["glucophage", "二甲双胍"], "drug", "A tablet that lowers blood sugar by reducing the sugar your liver releases. Take it with or after meals to avoid stomach upset."),
    ("gliclazide", "gliclazide", &[], "drug", "A sulfonylurea tablet that helps the pancreas release insulin. Do not skip meals when taking it."),
    ("glimepiride", "glimepiride", &[], "drug", "A once-a-day sulfonylurea tablet that boosts insulin release. It can cause low blood sugar."),
    ("glipizide", "glipizide", &[], "drug", "A sulfonylurea tablet taken before meals that helps release insulin."),
    ("glibenclamide", "glibenclamide", &["glyburide"], "drug", "An older, strong sulfonylurea tablet with a higher chance of low blood sugar."),
    ("repaglinide", "repaglinide", &[], "drug", "A short-acting tablet taken just before meals. If you skip the meal, skip the dose."),
    ("nateglinide", "nateglinide", &[], "drug", "A short-acting tablet taken before meals to control the rise in sugar after eating."),
    ("acarbose", "acarbose", &[], "drug", "A tablet chewed with the first bite of a meal that slows the digestion of starch."),
    ("voglibose", "voglibose", &[], "drug", "A tablet taken right before meals that slows sugar absorption from food."),
    ("sitagliptin", "sitagliptin", &[], "drug", "A DPP-4 inhibitor tablet taken once a day that helps insulin release after meals."),
    ("saxagliptin", "saxagliptin", &[], "drug", "A DPP-4 inhibitor tablet taken once a day."),
    ("linagliptin", "linagliptin", &[], "drug", "A DPP-4 inhibitor tablet that is safe for people with kidney problems."),
    ("alogliptin", "alogliptin", &[], "drug", "A DPP-4 inhibitor tablet taken once a day."),
    ("vildagliptin", "vildagliptin", &[], "drug", "A DPP-4 inhibitor tablet usually taken twice a day."),
    ("dapagliflozin", "dapagliflozin", &[], "drug", "An SGLT2 inhibitor tablet that removes sugar through the urine. Drink enough water."),
    ("empagliflozin", "empagliflozin", &[], "drug", "An SGLT2 inhibitor tablet that also lowers the risk of heart problems."),
    ("canagliflozin", "canagliflozin", &[], "drug", "An SGLT2 inhibitor tablet taken before the first meal of the day."),
    ("pioglitazone", "pioglitazone", &[], "drug", "A tablet that helps the body respond to insulin. Report swelling or sudden weight gain."),
    ("rosiglitazone", "rosiglitazone", &[], "drug", "A glitazone tablet that improves insulin sensitivity."),
    ("liraglutide", "liraglutide", &[], "drug", "A daily GLP-1 injection that lowers blood sugar and appetite."),
    ("semaglutide", "semaglutide", &[], "drug", "A weekly GLP-1 injection, also available as a tablet, that lowers blood sugar and body weight."),
    ("dulaglutide", "dulaglutide", &[], "drug", "A weekly GLP-1 injection given with a ready-to-use pen."),
    ("exenatide", "exenatide", &[], "drug", "A GLP-1 injection taken before meals or once a week."),
    ("insulin_glargine", "insulin glargine", &["glargine", "lantus"], "drug", "A long-acting insulin injected once a day at the same time."),
    ("insulin_detemir", "insulin detemir", &["detemir"], "drug", "A long-acting insulin injected once or twice a day."),
    ("insulin_degludec", "insulin degludec", &["degludec"], "drug", "An ultra-long-acting insulin that lasts more than a day."),
    ("insulin_aspart", "insulin aspart", &["aspart", "novorapid"], "drug", "A rapid-acting insulin injected just before eating."),
    ("insulin_lispro", "insulin lispro", &["lispro", "humalog"], "drug", "A rapid-acting insulin injected within 15 minutes of a meal."),
    ("nph_insulin", "NPH insulin", &["isophane insulin"], "drug", "An intermediate-acting cloudy insulin that lasts about half a day."),
    ("regular_insulin", "regular insulin", &["short-acting insulin"], "drug", "A short-acting insulin injected about 30 minutes before a meal."),
    ("atorvastatin", "atorvastatin", &[], "drug", "A statin tablet that lowers cholesterol."),
    ("rosuvastatin", "rosuvastatin", &[], "drug", "A strong statin tablet that lowers cholesterol."),
    ("aspirin", "aspirin", &[], "drug", "A tablet that thins the blood. Only take it daily if your doctor advises."),
    ("amlodipine", "amlodipine", &[], "drug", "A blood pressure tablet that relaxes blood vessels. It can cause ankle swelling."),
    ("losartan", "losartan", &[], "drug", "A blood pressure tablet that also protects the kidneys."),
    ("valsartan", "valsartan", &[], "drug", "A blood pressure tablet in the ARB family."),
    ("enalapril", "enalapril", &[], "drug", "An ACE inhibitor tablet for blood pressure and kidney protection."),
    ("glucagon", "glucagon", &["glucagon injection"], "drug", "An emergency injection that raises blood sugar quickly during a severe hypo."),
];

pub(super) const SYMPTOMS: &[Seed] = &[
    ("blurred_vision", "blurred vision", &["blurry vision", "fuzzy eyesight"], "symptom", "Things look out of focus. High or swinging blood sugar can change the shape of the lens."),
    ("numbness", "numbness", &["numb feet", "loss of feeling"], "symptom", "Reduced feeling, often in the toes or feet, which can be a sign of nerve damage."),
    ("tingling", "tingling", &["pins and needles"], "symptom", "A prickly feeling in the hands or feet that can come from nerve damage."),
    ("fatigue", "fatigue", &["tiredness", "feeling tired"], "symptom", "Feeling tired most of the time. High blood sugar often makes people feel worn out."),
    ("thirst", "excessive thirst", &["polydipsia", "always thirsty", "thirst"], "symptom", "Feeling very thirsty because the body is losing water to flush out extra sugar."),
    ("frequent_urination", "frequent urination", &["polyuria", "peeing a lot"], "symptom", "Needing to pass urine often, especially at night, when blood sugar is high."),
    ("hunger", "excessive hunger", &["polyphagia"], "symptom", "Feeling very hungry even after eating because the cells cannot use sugar well."),
    ("weight_loss", "unexplained weight loss", &["losing weight without trying"], "symptom", "Losing weight without trying, which can mean the body is breaking down fat and muscle for energy."),
    ("slow_healing", "slow wound healing", &["cuts heal slowly"], "symptom", "Cuts and sores take a long time to heal when blood sugar stays high."),
    ("dizziness", "dizziness", &["light-headedness", "feeling faint"], "symptom", "Feeling unsteady or faint. It can be a sign of low blood sugar or low blood pressure."),
    ("sweating", "cold sweat", &["sweating", "clammy skin"], "symptom", "Sudden sweating with cold, clammy skin is a common warning sign of low blood sugar."),
    ("palpitations", "palpitations", &["racing heart", "pounding heart"], "symptom", "Feeling your heart beat fast or hard, which can happen during a hypo."),
    ("tremor", "shakiness", &["trembling", "shaky hands"], "symptom", "Shaking hands or body, an early sign of low blood sugar."),
    ("headache", "headache", &[], "symptom", "Pain in the head. It can come with both high and low blood sugar."),
    ("nausea", "nausea", &["feeling sick"], "symptom", "Feeling like you might vomit. Some diabetes medicines cause it when you start them."),
    ("vomiting", "vomiting", &["throwing up"], "symptom", "Being sick. With diabetes, repeated vomiting needs urgent medical advice."),
    ("dry_mouth", "dry mouth", &[], "symptom", "A dry, sticky mouth, often from dehydration when blood sugar is high."),
    ("itchy_skin", "itchy skin", &["itching"], "symptom", "Skin that itches, sometimes from dryness or poor circulation."),
    ("foot_pain", "foot pain", &["burning feet"], "symptom", "Pain or burning in the feet, often worse at night, from nerve damage."),
    ("leg_cramps", "leg cramps", &["calf cramps"], "symptom", "Sudden painful tightening of leg muscles."),
    ("chest_pain", "chest pain", &["chest tightness"], "symptom", "Pain or pressure in the chest. Seek emergency care if it is sudden or severe."),
    ("breathlessness", "shortness of breath", &["breathlessness"], "symptom", "Finding it hard to catch your breath, which can be a sign of heart trouble."),
    ("ankle_swelling", "ankle swelling", &["swollen ankles", "edema"], "symptom", "Puffy ankles or feet from fluid build-up, sometimes from medicines or heart problems."),
    ("recurrent_infections", "recurrent infections", &["frequent infections"], "symptom", "Getting infections again and again, which is more common when blood sugar is high."),
    ("irritability", "irritability", &["mood swings"], "symptom", "Feeling cross or upset easily, which can happen when blood sugar is low."),
];

pub(super) const PROCEDURES: &[Seed] = &[
    ("hba1c_test", "HbA1c test", &["A1c test", "glycated hemoglobin test"], "procedure", "A blood test that shows your average blood sugar over the past two to three months."),
    ("fpg_test", "fasting plasma glucose test", &["fasting blood test"], "procedure", "A blood sugar test taken after not eating for at least eight hours."),
    ("ogtt", "oral glucose tolerance test", &["OGTT", "sugar drink test"], "procedure", "You drink a sweet liquid and blood sugar is measured over two hours to see how your body handles sugar."),
    ("fingerstick", "fingerstick test", &["finger prick test", "finger prick"], "procedure", "Pricking a fingertip to put a drop of blood on a meter strip to check blood sugar."),
    ("cgm", "continuous glucose monitoring", &["CGM", "glucose sensor"], "procedure", "A small sensor under the skin that measures sugar day and night and sends readings to a device."),
    ("smbg", "self-monitoring of blood glucose", &["SMBG", "home glucose testing"], "procedure", "Checking your own blood sugar at home with a meter and writing down the results."),
    ("urine_albumin_test", "urine albumin test", &["urine protein test", "microalbumin test"], "procedure", "A urine test that looks for small amounts of protein, an early sign of kidney damage."),
    ("eye_exam", "dilated eye examination", &["eye exam", "fundus examination", "eye check"], "procedure", "The eye doctor widens your pupils with drops to look at the back of the eye for damage."),
    ("foot_exam", "foot examination", &["foot check", "monofilament test"], "procedure", "A check of the feet for feeling, pulses, skin and sores."),
    ("lipid_panel", "lipid panel", &["cholesterol test", "lipid profile"], "procedure", "A blood test that measures cholesterol and other fats."),
    ("kidney_function_test", "kidney function test", &["renal function test"], "procedure", "Blood and urine tests that show how well the kidneys filter waste."),
    ("bp_measurement", "blood pressure measurement", &["blood pressure check"], "procedure", "Measuring blood pressure with a cuff on the arm."),
    ("insulin_injection", "insulin injection", &["insulin shot", "insulin jab"], "procedure", "Giving insulin under the skin with a pen or syringe, usually in the belly or thigh."),
    ("insulin_pump", "insulin pump therapy", &["insulin pump"], "procedure", "A small device that delivers insulin through a thin tube under the skin all day."),
    ("injection_site_rotation", "injection site rotation", &["rotating injection sites"], "procedure", "Changing the spot where you inject each time to avoid lumps under the skin."),
    ("bariatric_surgery", "bariatric surgery", &["weight loss surgery", "metabolic surgery"], "procedure", "An operation on the stomach or gut that leads to major weight loss and can improve diabetes."),
    ("ecg", "electrocardiogram", &["ECG", "EKG"], "procedure", "A painless test that records the electrical activity of the heart."),
    ("nerve_conduction", "nerve conduction study", &[], "procedure", "A test that measures how fast signals travel along nerves."),
    ("abi", "ankle-brachial index", &["ABI"], "procedure", "Comparing blood pressure at the ankle and arm to check leg circulation."),
    ("dental_checkup", "dental check-up", &["dental visit"], "procedure", "A visit to the dentist to check teeth and gums, recommended twice a year with diabetes."),
    ("flu_vaccination", "flu vaccination", &["flu shot", "influenza vaccine"], "procedure", "A yearly vaccine that lowers the chance of serious flu, advised for people with diabetes."),
    ("ketone_test", "ketone test", &["ketone check", "urine ketone test"], "procedure", "A urine or blood test for ketones, used when blood sugar is very high or you feel unwell."),
    ("follow_up_visit", "follow-up visit", &["follow-up appointment", "review appointment"], "procedure", "A planned visit to check how treatment is working and adjust it."),
    ("diabetes_education", "diabetes self-management education", &["diabetes education class", "DSME"], "procedure", "Classes that teach you how to manage diabetes day to day."),
    ("retinal_photography", "retinal photography", &["retinal screening photo"], "procedure", "Photographs of the back of the eye taken to screen for diabetic eye disease."),
];

pub(super) const LIFESTYLE: &[Seed] = &[
    ("fruit", "fruit", &["fruits"], "lifestyle", "Fruit contains natural sugar and fibre. Whole fruit in small portions, eaten with a meal, is usually fine."),
    ("apple", "apple", &["apples"], "lifestyle", "A lower-sugar fruit with plenty of fibre; one small apple is a good snack."),
    ("banana", "banana", &["bananas"], "lifestyle", "A sweet fruit; half a banana raises blood sugar less than a whole ripe one."),
    ("watermelon", "watermelon", &[], "lifestyle", "A watery fruit that raises blood sugar quickly; keep to a small slice."),
    ("grapes", "grapes", &[], "lifestyle", "Small sweet fruit that is easy to overeat; count out a handful."),
    ("white_rice", "white rice", &["polished rice"], "lifestyle", "A starchy staple that raises blood sugar fast. Smaller bowls and mixing in grains help."),
    ("brown_rice", "brown rice", &[], "lifestyle", "Rice with its outer layer kept, giving more fibre and a slower sugar rise than white rice."),
    ("noodles", "noodles", &[], "lifestyle", "A starchy food; pair a small portion with vegetables and protein."),
    ("steamed_bun", "steamed bun", &["mantou"], "lifestyle", "A wheat bun that is mostly starch and counts as a carbohydrate serving."),
    ("congee", "congee", &["rice porridge"], "lifestyle", "Rice cooked into porridge. It raises blood sugar faster than plain rice."),
    ("whole_grains", "whole grains", &["coarse grains"], "lifestyle", "Grains such as oats and millet that keep their fibre and release sugar slowly."),
    ("vegetables", "non-starchy vegetables", &["vegetables", "veggies"], "lifestyle", "Vegetables like greens, cabbage and tomatoes that barely raise blood sugar. Fill half your plate with them."),
    ("sugary_drinks", "sugary drinks", &["soft drinks", "soda"], "lifestyle", "Drinks with added sugar raise blood sugar quickly and are best avoided."),
    ("fruit_juice", "fruit juice", &["juice"], "lifestyle", "Juice has the sugar of fruit without the fibre and raises blood sugar fast."),
    ("alcohol", "alcohol", &["drinking alcohol", "liquor"], "lifestyle", "Alcohol can cause low blood sugar hours later, especially with insulin or sulfonylureas."),
    ("smoking", "smoking", &["cigarettes", "tobacco"], "lifestyle", "Smoking damages blood vessels and makes diabetes complications much more likely."),
    ("walking", "walking", &["daily walk"], "lifestyle", "Walking after meals helps lower the rise in blood sugar."),
    ("brisk_walking", "brisk walking", &[], "lifestyle", "Walking fast enough to breathe harder but still talk; aim for 30 minutes most days."),
    ("swimming", "swimming", &[], "lifestyle", "Exercise in water that is easy on the joints."),
    ("tai_chi", "tai chi", &["taiji"], "lifestyle", "Slow, flowing exercise that improves balance and can help blood sugar."),
    ("cycling", "cycling", &["bike riding"], "lifestyle", "Riding a bicycle, a steady exercise for heart and blood sugar."),
    ("resistance_training", "resistance training", &["strength training", "weight training"], "lifestyle", "Exercises that build muscle, which helps the body use sugar."),
    ("carb_counting", "carbohydrate counting", &["carb counting"], "lifestyle", "Keeping track of the carbohydrates in each meal to keep blood sugar steady."),
    ("glycemic_index", "glycemic index", &["GI"], "lifestyle", "A ranking of how fast a food raises blood sugar. Lower is gentler."),
    ("low_salt_diet", "low-salt diet", &["low-sodium diet"], "lifestyle", "Eating less salt to help control blood pressure."),
    ("portion_control", "portion control", &["smaller portions"], "lifestyle", "Eating sensible amounts, for example using a smaller bowl for rice."),
    ("meal_planning", "meal planning", &["plate method"], "lifestyle", "Planning balanced meals ahead: half vegetables, a quarter protein, a quarter starch."),
    ("dietary_fiber", "dietary fiber", &["fibre", "fiber"], "lifestyle", "The part of plant food you cannot digest. It slows the rise in blood sugar."),
    ("regular_meals", "regular mealtimes", &["eating on schedule"], "lifestyle", "Eating at about the same times each day keeps blood sugar and medicines in step."),
    ("sleep_hygiene", "sleep hygiene", &["good sleep habits"], "lifestyle", "Habits that help you sleep well, such as a regular bedtime and no screens late at night."),
    ("stress_management", "stress management", &["managing stress"], "lifestyle", "Ways to calm stress, which can raise blood sugar."),
    ("weight_management", "weight management", &["losing weight"], "lifestyle", "Reaching and keeping a healthy weight, which improves blood sugar."),
    ("foot_care", "daily foot care", &["foot care"], "lifestyle", "Washing, drying and checking the feet each day and wearing well-fitting shoes."),
    ("hydration", "hydration", &["drinking water"], "lifestyle", "Drinking enough water, especially when blood sugar is high."),
    ("sweets", "sweets", &["candy", "desserts"], "lifestyle", "Foods with lots of added sugar; keep them small and occasional."),
    ("nuts", "nuts", &["unsalted nuts"], "lifestyle", "A snack with healthy fats; a small handful is enough."),
    ("hypo_treatment", "hypo treatment", &["rule of 15", "fast-acting sugar"], "lifestyle", "Take 15 g of fast sugar, such as glucose tablets or juice, then recheck after 15 minutes."),
    ("sick_day_rules", "sick day rules", &["sick day plan"], "lifestyle", "What to do with medicines and testing when you are ill."),
    ("medication_adherence", "medication adherence", &["taking medicine as prescribed"], "lifestyle", "Taking your medicines at the right dose and time, every day."),
    ("pill_organizer", "pill organizer", &["pill box"], "lifestyle", "A box with sections for each day to help you remember tablets."),
];

pub(super) const METRICS: &[Seed] = &[
    ("blood_glucose", "blood glucose", &["blood sugar", "glucose level", "sugar level", "血糖"], "metric", "The amount of sugar in your blood, measured in mmol/L."),
    ("fasting_glucose", "fasting blood glucose", &["fasting blood sugar", "fasting glucose", "FBG"], "metric", "Blood sugar measured after at least eight hours without food, usually in the morning."),
    ("postprandial_glucose", "postprandial blood glucose", &["post-meal blood sugar", "after-meal blood sugar", "postprandial glucose"], "metric", "Blood sugar measured about two hours after starting a meal."),
    ("hba1c", "HbA1c", &["glycated hemoglobin", "A1c", "hemoglobin A1c"], "metric", "A number showing your average blood sugar over the past two to three months. Many people aim for below 7%."),
    ("blood_pressure", "blood pressure", &["BP"], "metric", "The force of blood against the artery walls, written as two numbers such as 130/80."),
    ("bmi", "body mass index", &["BMI"], "metric", "Weight compared with height, used to judge whether weight is healthy."),
    ("waist", "waist circumference", &["waist size"], "metric", "The distance around your waist, a measure of belly fat."),
    ("ldl", "LDL cholesterol", &["bad cholesterol", "LDL"], "metric", "The kind of cholesterol that clogs arteries. Lower is better."),
    ("hdl", "HDL cholesterol", &["good cholesterol", "HDL"], "metric", "The kind of cholesterol that helps clear fat from arteries. Higher is better."),
    ("triglycerides", "triglycerides", &["TG"], "metric", "A type of blood fat that rises with sugar, alcohol and extra weight."),
    ("total_cholesterol", "total cholesterol", &[], "metric", "All the cholesterol in your blood added together."),
    ("egfr", "estimated glomerular filtration rate", &["eGFR", "kidney filtration rate"], "metric", "A number estimating how well the kidneys filter blood."),
    ("uacr", "urine albumin-to-creatinine ratio", &["UACR", "ACR"], "metric", "A urine test result that shows protein leakage from the kidneys."),
    ("c_peptide", "C-peptide", &[], "metric", "A substance made alongside insulin that shows how much insulin your body still produces."),
    ("creatinine", "serum creatinine", &["creatinine"], "metric", "A waste product in blood used to check kidney function."),
    ("heart_rate", "heart rate", &["pulse"], "metric", "How many times your heart beats each minute."),
    ("body_weight", "body weight", &["weight"], "metric", "How heavy you are. Small losses can improve blood sugar."),
    ("time_in_range", "time in range", &["TIR"], "metric", "The share of readings or time your blood sugar stays between 3.9 and 10.0 mmol/L."),
    ("glycemic_variability", "glycemic variability", &["blood sugar swings"], "metric", "How much your blood sugar goes up and down during the day."),
    ("ketones", "blood ketones", &["ketones"], "metric", "Acids made when the body burns fat for fuel; high levels with high sugar are dangerous."),
    ("uric_acid", "uric acid", &[], "metric", "A waste product in blood; high levels can cause gout."),
];

/// (src, relation, dst) edges among seeds.
pub(super) const SEED_EDGES: &[(&str, &str, &str)] = &[
    ("t2dm", "subtype_of", "diabetes"),
    ("t1dm", "subtype_of", "diabetes"),
    ("gestational_diabetes", "subtype_of", "diabetes"),
    ("prediabetes", "related_to", "t2dm"),
    ("insulin_resistance", "related_to", "t2dm"),
    ("obesity", "related_to", "insulin_resistance"),
    ("metabolic_syndrome", "related_to", "t2dm"),
    ("hypertension", "related_to", "t2dm"),
    ("hyperlipidemia", "related_to", "t2dm"),
    ("dyslipidemia", "related_to", "hyperlipidemia"),
    ("retinopathy", "related_to", "t2dm"),
    ("macular_edema", "subtype_of", "retinopathy"),
    ("nephropathy", "related_to", "t2dm"),
    ("nephropathy", "subtype_of", "ckd"),
    ("neuropathy", "related_to", "t2dm"),
    ("foot_ulcer", "related_to", "neuropathy"),
    ("foot_ulcer", "related_to", "pad"),
    ("cad", "related_to", "t2dm"),
    ("atherosclerosis", "related_to", "cad"),
    ("stroke", "related_to", "atherosclerosis"),
    ("pad", "related_to", "atherosclerosis"),
    ("heart_failure", "related_to", "cad"),
    ("dka", "related_to", "t1dm"),
    ("hhs", "related_to", "t2dm"),
    ("fatty_liver", "related_to", "t2dm"),
    ("periodontitis", "related_to", "t2dm"),
    ("gastroparesis", "related_to", "neuropathy"),
    ("cataract", "related_to", "t2dm"),
    ("glaucoma", "related_to", "t2dm"),
    ("depression", "related_to", "t2dm"),
    ("sleep_apnea", "related_to", "obesity"),
    ("uti", "related_to", "t2dm"),
    ("frozen_shoulder", "related_to", "t2dm"),
    ("carpal_tunnel", "related_to", "t2dm"),
    ("erectile_dysfunction", "related_to", "neuropathy"),
    ("acanthosis", "related_to", "insulin_resistance"),
    ("hypoglycemia", "related_to", "diabetes"),
    ("hyperglycemia", "related_to", "diabetes"),
    ("metformin", "subtype_of", "biguanide"),
    ("gliclazide", "subtype_of", "sulfonylurea"),
    ("glimepiride", "subtype_of", "sulfonylurea"),
    ("glipizide", "subtype_of", "sulfonylurea"),
    ("glibenclamide", "subtype_of", "sulfonylurea"),
    ("repaglinide", "subtype_of", "meglitinide"),
    ("nateglinide", "subtype_of", "meglitinide"),
    ("acarbose", "subtype_of", "agi"),
    ("voglibose", "subtype_of", "agi"),
    ("sitagliptin", "subtype_of", "dpp4"),
    ("saxagliptin", "subtype_of", "dpp4"),
    ("linagliptin", "subtype_of", "dpp4"),
    ("alogliptin", "subtype_of", "dpp4"),
    ("vildagliptin", "subtype_of", "dpp4"),
    ("dapagliflozin", "subtype_of", "sglt2"),
    ("empagliflozin", "subtype_of", "sglt2"),
    ("canagliflozin", "subtype_of", "sglt2"),
    ("pioglitazone", "subtype_of", "tzd"),
    ("rosiglitazone", "subtype_of", "tzd"),
    ("liraglutide", "subtype_of", "glp1"),
    ("semaglutide", "subtype_of", "glp1"),
    ("dulaglutide", "subtype_of", "glp1"),
    ("exenatide", "subtype_of", "glp1"),
    ("insulin_glargine", "subtype_of", "basal_insulin"),
    ("insulin_detemir", "subtype_of", "basal_insulin"),
    ("insulin_degludec", "subtype_of", "basal_insulin"),
    ("insulin_aspart", "subtype_of", "bolus_insulin"),
    ("insulin_lispro", "subtype_of", "bolus_insulin"),
    ("regular_insulin", "subtype_of", "bolus_insulin"),
    ("nph_insulin", "subtype_of", "insulin"),
    ("basal_insulin", "subtype_of", "insulin"),
    ("bolus_insulin", "subtype_of", "insulin"),
    ("premixed_insulin", "subtype_of", "insulin"),
    ("atorvastatin", "subtype_of", "statin"),
    ("rosuvastatin", "subtype_of", "statin"),
    ("enalapril", "subtype_of", "ace_inhibitor"),
    ("losartan", "subtype_of", "arb"),
    ("valsartan", "subtype_of", "arb"),
    ("biguanide", "treats", "t2dm"),
    ("sulfonylurea", "treats", "t2dm"),
    ("dpp4", "treats", "t2dm"),
    ("sglt2", "treats", "t2dm"),
    ("glp1", "treats", "t2dm"),
    ("tzd", "treats", "t2dm"),
    ("agi", "treats", "t2dm"),
    ("meglitinide", "treats", "t2dm"),
    ("insulin", "treats", "diabetes"),
    ("metformin", "treats", "t2dm"),
    ("metformin", "treats", "prediabetes"),
    ("statin", "treats", "hyperlipidemia"),
    ("ace_inhibitor", "treats", "hypertension"),
    ("arb", "treats", "hypertension"),
    ("amlodipine", "treats", "hypertension"),
    ("losartan", "treats", "nephropathy"),
    ("glucagon", "treats", "hypoglycemia"),
    ("hypo_treatment", "treats", "hypoglycemia"),
    ("aspirin", "related_to", "cad"),
    ("metformin", "contraindicated_with", "ckd"),
    ("metformin", "contraindicated_with", "alcohol"),
    ("pioglitazone", "contraindicated_with", "heart_failure"),
    ("sglt2", "contraindicated_with", "dka"),
    ("sulfonylurea", "related_to", "hypoglycemia"),
    ("insulin", "related_to", "hypoglycemia"),
    ("alcohol", "related_to", "hypoglycemia"),
    ("blurred_vision", "symptom_of", "hyperglycemia"),
    ("blurred_vision", "symptom_of", "retinopathy"),
    ("numbness", "symptom_of", "neuropathy"),
    ("tingling", "symptom_of", "neuropathy"),
    ("foot_pain", "symptom_of", "neuropathy"),
    ("fatigue", "symptom_of", "hyperglycemia"),
    ("thirst", "symptom_of", "hyperglycemia"),
    ("frequent_urination", "symptom_of", "hyperglycemia"),
    ("hunger", "symptom_of", "hyperglycemia"),
    ("weight_loss", "symptom_of", "t2dm"),
    ("slow_healing", "symptom_of", "hyperglycemia"),
    ("recurrent_infections", "symptom_of", "hyperglycemia"),
    ("dry_mouth", "symptom_of", "hyperglycemia"),
    ("itchy_skin", "symptom_of", "t2dm"),
    ("dizziness", "symptom_of", "hypoglycemia"),
    ("sweating", "symptom_of", "hypoglycemia"),
    ("palpitations", "symptom_of", "hypoglycemia"),
    ("tremor", "symptom_of", "hypoglycemia"),
    ("irritability", "symptom_of", "hypoglycemia"),
    ("headache", "symptom_of", "hyperglycemia"),
    ("nausea", "symptom_of", "dka"),
    ("vomiting", "symptom_of", "dka"),
    ("leg_cramps", "symptom_of", "pad"),
    ("chest_pain", "symptom_of", "cad"),
    ("breathlessness", "symptom_of", "heart_failure"),
    ("ankle_swelling", "symptom_of", "heart_failure"),
    ("nausea", "related_to", "metformin"),
    ("ankle_swelling", "related_to", "amlodipine"),
    ("hba1c", "measures", "t2dm"),
    ("fasting_glucose", "measures", "t2dm"),
    ("postprandial_glucose", "measures", "t2dm"),
    ("blood_glucose", "measures", "diabetes"),
    ("fasting_glucose", "subtype_of", "blood_glucose"),
    ("postprandial_glucose", "subtype_of", "blood_glucose"),
    ("time_in_range", "measures", "blood_glucose"),
    ("glycemic_variability", "measures", "blood_glucose"),
    ("blood_pressure", "measures", "hypertension"),
    ("bmi", "measures", "obesity"),
    ("waist", "measures", "obesity"),
    ("ldl", "measures", "hyperlipidemia"),
    ("hdl", "measures", "hyperlipidemia"),
    ("triglycerides", "measures", "hyperlipidemia"),
    ("total_cholesterol", "measures", "hyperlipidemia"),
    ("egfr", "measures", "ckd"),
    ("uacr", "measures", "nephropathy"),
    ("creatinine", "measures", "ckd"),
    ("c_peptide", "measures", "insulin_resistance"),
    ("ketones", "measures", "dka"),
    ("uric_acid", "measures", "gout"),
    ("heart_rate", "related_to", "palpitations"),
    ("body_weight", "related_to", "bmi"),
    ("hba1c_test", "measures", "hba1c"),
    ("fpg_test", "measures", "fasting_glucose"),
    ("ogtt", "measures", "postprandial_glucose"),
    ("fingerstick", "measures", "blood_glucose"),
    ("cgm", "measures", "blood_glucose"),
    ("smbg", "measures", "blood_glucose"),
    ("urine_albumin_test", "measures", "uacr"),
    ("kidney_function_test", "measures", "egfr"),
    ("lipid_panel", "measures", "ldl"),
    ("bp_measurement", "measures", "blood_pressure"),
    ("ketone_test", "measures", "ketones"),
    ("eye_exam", "related_to", "retinopathy"),
    ("retinal_photography", "related_to", "retinopathy"),
    ("foot_exam", "related_to", "neuropathy"),
    ("nerve_conduction", "related_to", "neuropathy"),
    ("abi", "related_to", "pad"),
    ("ecg", "related_to", "cad"),
    ("dental_checkup", "related_to", "periodontitis"),
    ("insulin_injection", "related_to", "insulin"),
    ("insulin_pump", "related_to", "insulin"),
    ("injection_site_rotation", "related_to", "insulin_injection"),
    ("bariatric_surgery", "treats", "obesity"),
    ("flu_vaccination", "related_to", "t2dm"),
    ("follow_up_visit", "related_to", "t2dm"),
    ("diabetes_education", "related_to", "t2dm"),
    ("fruit", "related_to", "blood_glucose"),
    ("apple", "subtype_of", "fruit"),
    ("banana", "subtype_of", "fruit"),
    ("watermelon", "subtype_of", "fruit"),
    ("grapes", "subtype_of", "fruit"),
    ("fruit_juice", "related_to", "fruit"),
    ("fruit", "related_to", "metformin"),
    ("white_rice", "related_to", "postprandial_glucose"),
    ("brown_rice", "related_to", "whole_grains"),
    ("congee", "related_to", "white_rice"),
    ("noodles", "related_to", "carb_counting"),
    ("steamed_bun", "related_to", "carb_counting"),
    ("whole_grains", "related_to", "dietary_fiber"),
    ("vegetables", "related_to", "meal_planning"),
    ("sugary_drinks", "related_to", "hyperglycemia"),
    ("smoking", "related_to", "atherosclerosis"),
    ("walking", "treats", "t2dm"),
    ("brisk_walking", "subtype_of", "walking"),
    ("swimming", "related_to", "t2dm"),
    ("tai_chi", "related_to", "t2dm"),
    ("cycling", "related_to", "t2dm"),
    ("resistance_training", "related_to", "insulin_resistance"),
    ("carb_counting", "related_to", "bolus_insulin"),
    ("glycemic_index", "related_to", "carb_counting"),
    ("low_salt_diet", "treats", "hypertension"),
    ("portion_control", "related_to", "weight_management"),
    ("meal_planning", "related_to", "portion_control"),
    ("dietary_fiber", "related_to", "postprandial_glucose"),
    ("regular_meals", "related_to", "sulfonylurea"),
    ("sleep_hygiene", "related_to", "sleep_apnea"),
    ("stress_management", "related_to", "blood_glucose"),
    ("weight_management", "treats", "obesity"),
    ("foot_care", "related_to", "foot_ulcer"),
    ("hydration", "related_to", "hhs"),
    ("sweets", "related_to", "hyperglycemia"),
    ("nuts", "related_to", "ldl"),
    ("sick_day_rules", "related_to", "dka"),
    ("medication_adherence", "related_to", "t2dm"),
    ("pill_organizer", "related_to", "medication_adherence"),
];
