// Regenerates vader_golden.jsonl from the reference VADER implementation
// (Hutto & Gilbert 2014), via the vaderSentiment-org JavaScript port:
//
//   npm install vader-sentiment@1.1.3
//   node make_golden.js > vader_golden.jsonl
//
// The port's final toFixed() rounding is disabled so the fixture carries
// full-precision doubles; the engine under test is compared at 1e-4.
'use strict';

const vader = require('vader-sentiment');

Number.prototype.toFixed = function () {
  return this.toString();
};

const sentences = [
  // canonical demo sentences
  'VADER is smart, handsome, and funny.',
  'VADER is smart, handsome, and funny!',
  'VADER is very smart, handsome, and funny.',
  'VADER is VERY SMART, handsome, and FUNNY.',
  'VADER is VERY SMART, handsome, and FUNNY!!!',
  'VADER is not smart, handsome, nor funny.',
  'The book was good.',
  "At least it isn't a horrible book.",
  'The book was only kind of good.',
  'The plot was good, but the characters are uncompelling and the dialog is not great.',
  'Today SUX!',
  "Today only kinda sux! But I'll get by, lol",
  'Make sure you :) or :D today!',
  'Catch utf-8 emoji such as 💘 and 💋 and 😁',
  'Not bad at all',
  // lexicon + heuristics, one rule at a time
  'good',
  'not good',
  'so good',
  'very good',
  'really very good',
  'extremely incredibly good',
  'really not good',
  'not really good',
  'GOOD',
  'GOOD day',
  'it is a great day',
  'this is so GREAT',
  'never so good',
  'never this good',
  'never was so good',
  'it was never good',
  'without doubt excellent',
  'without a doubt excellent',
  'at least it is good',
  'least good thing',
  'the very least good',
  'that movie was the shit',
  'that movie was the bomb',
  'he is a bad ass dude',
  'well yeah right sure thing',
  'this one cut the mustard surely',
  'such a kiss of death moment for real',
  'hand to mouth living here sadly',
  "isn't good",
  "wasn't that good",
  "ain't bad",
  'dont like it',
  "don't like it",
  'cannot stand him',
  'hardly good',
  'almost perfect',
  'kind of amazing',
  'sort of terrible',
  'uber cool',
  'good good good',
  'good stuff but bad vibes',
  'nice work but it failed badly',
  'I like it BUT it could be better',
  'But good',
  'good!!',
  'good!!!!',
  'good?? really??',
  'why???? what????',
  'amazing?!?!',
  'YELLING GOOD THINGS',
  'mixed CASE Good day',
  ':) :) :(',
  ':D great',
  'meh :| whatever',
  'lol that was funny',
  'smh not funny',
  'I am 100% certain this works great',
  'the test número uno was good',
  'ENThusiastic response',
  // tweet-shaped inputs
  'Just got my first dose! Feeling great 💉 #CovidVaccine https://t.co/abc123',
  'Second dose done. Mild headache but totally worth it #Pfizer',
  'Worried about side effects of the new vaccine... anyone else scared?',
  'My arm hurts so bad after the moderna shot 😩',
  'Vaccination appointment booked for Monday at the clinic',
  'The rollout in our county has been a complete disaster. Terrible planning.',
  'Grateful to all the nurses and volunteers at the vaccination centre today ❤️',
  'RT @healthdept: new guidance for second doses available at www.health.gov/guidance',
  'No appointments available anywhere. This system is broken and frustrating!!',
  'Got my jab today. Quick, painless, and the staff were wonderful :)',
  'Same folks said daikon paste could treat a cytokine storm #PfizerBioNTech',
  'While the world has been on the wrong side of history this year hopefully the biggest vaccination effort weveev',
  'Does anyone have any useful advice/guidance for whether the COVID vaccine is safe whilst breastfeeding',
  "Facts are immutable, Senator, even when you're not ethically sturdy enough to acknowledge them 1 You were born i",
  'Covid vaccine You getting it #CovidVaccine #covid19 #PfizerBioNTech #Moderna',
  '#coronavirus #SputnikV #AstraZeneca #PfizerBioNTech #Moderna #Covid19 Russian vaccine is created to last 2 4 years',
  'it is a bit sad to claim the fame for success of #vaccination on patriotic competition between USA Canada UK and',
  'There have not been many bright days in 2020 but here are some of the best',
  'email me at test@example.com about trial slots',
  'Get the shot',
  'second dose people dose shot',
  '',
  'a',
  '!!!',
  '🙂',
  '☹',
];

if (sentences.length !== 100) {
  throw new Error(`expected 100 sentences, got ${sentences.length}`);
}

for (const text of sentences) {
  const s = vader.SentimentIntensityAnalyzer.polarity_scores(text);
  process.stdout.write(
    JSON.stringify({text: text, pos: s.pos, neg: s.neg, neu: s.neu, compound: s.compound}) + '\n'
  );
}
