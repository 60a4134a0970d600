#!/usr/bin/env python3
"""Regenerates tests/fixtures/{human,gpt4,quatrains}.jsonl and the CSV fixture.

Human poems are public-domain texts. The model-sourced poems are short
stand-ins written in the register of chat-model verse; the first two are
quoted model output.
"""
import csv
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
POEMS = ROOT / "poems"

HUMAN = [
    ("h-sonnet18", "sonnet", "Sonnet 18", (POEMS / "sonnet18.txt").read_text()),
    ("h-tyger", "quatrain", "The Tyger (excerpt)", """Tyger Tyger, burning bright,
In the forests of the night;
What immortal hand or eye,
Could frame thy fearful symmetry?

In what distant deeps or skies.
Burnt the fire of thine eyes?
On what wings dare he aspire?
What the hand, dare seize the fire?
"""),
    ("h-hope", "common measure", "\"Hope\" is the thing with feathers", """"Hope" is the thing with feathers -
That perches in the soul -
And sings the tune without the words -
And never stops - at all -

And sweetest - in the Gale - is heard -
And sore must be the storm -
That could abash the little Bird
That kept so many warm -

I've heard it in the chillest land -
And on the strangest Sea -
Yet - never - in Extremity,
It asked a crumb - of me.
"""),
    ("h-daffodils", "ballad", "I Wandered Lonely as a Cloud (excerpt)", """I wandered lonely as a cloud
That floats on high o'er vales and hills,
When all at once I saw a crowd,
A host, of golden daffodils;
Beside the lake, beneath the trees,
Fluttering and dancing in the breeze.
"""),
    ("h-spider", "free verse", "A Noiseless Patient Spider", """A noiseless patient spider,
I mark'd where on a little promontory it stood isolated,
Mark'd how to explore the vacant vast surrounding,
It launch'd forth filament, filament, filament, out of itself,
Ever unreeling them, ever tirelessly speeding them.

And you O my soul where you stand,
Surrounded, detached, in measureless oceans of space,
Ceaselessly musing, venturing, throwing, seeking the spheres to connect them,
Till the bridge you will need be form'd, till the ductile anchor hold,
Till the gossamer thread you fling catch somewhere, O my soul.
"""),
    ("h-woods", "quatrain", "Stopping by Woods on a Snowy Evening", """Whose woods these are I think I know.
His house is in the village though;
He will not see me stopping here
To watch his woods fill up with snow.

My little horse must think it queer
To stop without a farmhouse near
Between the woods and frozen lake
The darkest evening of the year.

He gives his harness bells a shake
To ask if there is some mistake.
The only other sound's the sweep
Of easy wind and downy flake.

The woods are lovely, dark and deep,
But I have promises to keep,
And miles to go before I sleep,
And miles to go before I sleep.
"""),
    ("h-beard", "limerick", "There was an Old Man with a beard", """There was an Old Man with a beard,
Who said, 'It is just as I feared!
Two Owls and a Hen,
Four Larks and a Wren,
Have all built their nests in my beard!'
"""),
    ("h-ozymandias", "sonnet", "Ozymandias", """I met a traveller from an antique land,
Who said: "Two vast and trunkless legs of stone
Stand in the desert. Near them, on the sand,
Half sunk a shattered visage lies, whose frown,
And wrinkled lip, and sneer of cold command,
Tell that its sculptor well those passions read
Which yet survive, stamped on these lifeless things,
The hand that mocked them, and the heart that fed;
And on the pedestal, these words appear:
My name is Ozymandias, King of Kings;
Look on my Works, ye Mighty, and despair!
Nothing beside remains. Round the decay
Of that colossal Wreck, boundless and bare
The lone and level sands stretch far away.
"""),
    ("h-death", "common measure", "Because I could not stop for Death (excerpt)", """Because I could not stop for Death -
He kindly stopped for me -
The Carriage held but just Ourselves -
And Immortality.

We slowly drove - He knew no haste
And I had put away
My labor and my leisure too,
For His Civility -
"""),
    ("h-bar", "elegy", "Crossing the Bar", """Sunset and evening star,
And one clear call for me!
And may there be no moaning of the bar,
When I put out to sea,

But such a tide as moving seems asleep,
Too full for sound and foam,
When that which drew from out the boundless deep
Turns again home.

Twilight and evening bell,
And after that the dark!
And may there be no sadness of farewell,
When I embark;

For tho' from out our bounds of Time and Place
The flood may bear me far,
I hope to see my Pilot face to face
When I have crost the bar.
"""),
]

GPT4 = [
    ("g-memorial", "limerick", "memorial day", "figurative",
     (POEMS / "memorial_day_limerick.txt").read_text()),
    ("g-social", "limerick", "social commentaries", "general",
     (POEMS / "social_commentary.txt").read_text()),
    ("g-halloween", "sonnet", "halloween", "general", """Upon a stage where shadows nightly reign,
The lanterns grin with fire in their eyes,
And children wander down the moonlit lane,
In borrowed masks and whispered sweet disguise.

We walk together where the echoes call,
Our hearts embrace the dark with gentle grace,
The autumn leaves in golden whispers fall,
And every ghost returns to find its place.

In every door a candle softly glows,
A dance of light upon the silent street,
The night wind hums a song that no one knows,
Where dreams and frights and sugared secrets meet.

So let us keep this night of masks and light,
And whisper to the dark a fond goodnight.
"""),
    ("g-nature", "a poem", "nature", "specific", """In the quiet of the forest deep,
Where ancient whispers softly creep,
We hear the echo of the stream,
A gentle voice, a silver dream.

The branches sway in soft embrace,
Each leaf a note of tender grace,
And in the hush of evening light,
Our hearts take wing in endless flight.
"""),
    ("g-love", "ballad", "love", "general", """Upon the shore where waters meet,
We walked as one with weary feet,
Your hand in mine, the evening sky,
A whisper passed as birds flew by.

Our hearts embrace the fading sun,
Two souls entwined, our journey one,
The echo of your gentle voice,
Reminds me love was not a choice.
"""),
    ("g-graduation", "quatrain", "graduation", "specific", """In caps and gowns we take the stage,
We turn together one more page,
The echo of our cheering friends,
A chapter starts, a chapter ends.

Our dreams take flight on eager wings,
We hear the song that future sings,
With grace we step into the light,
Our hearts ablaze, our futures bright.
"""),
    ("g-winter", "blank verse", "nature", "figurative", """Upon the chill of winter's breath descends,
A silver hush that wraps the sleeping hills,
We hear the whisper of the falling snow,
And in its echo find a quiet peace.
The branches bow beneath their frozen weight,
And every star keeps watch above the fields.
"""),
    ("g-ocean", "ode", "nature", "general", """In the heart of the ocean wide,
Where the silver waters glide,
We dance with the rolling tide,
Our dreams and hopes side by side.

The waves embrace the sandy shore,
A whisper of the days of yore,
The echo of a distant roar,
Forevermore, forevermore.
"""),
    ("g-city", "free verse", "living", "specific", """In the city of glass and steam,
We chase the light, we chase the dream,
A thousand voices, one refrain,
The whisper of the midnight train.

Beneath the towers, soft and slow,
The echoes of the traffic flow,
We find our grace in crowded streets,
Where every stranger's story meets.
"""),
    ("g-friendship", "couplet", "relationships", "general", """In laughter shared and burdens borne,
We greet together every morn.

Our hearts embrace through joy and pain,
Like sunlight after gentle rain.

The echo of a friendly call,
Will lift us up each time we fall.
"""),
    ("g-spring", "haiku", "nature", "general", """In the spring breeze
Cherry blossoms whisper soft
We dance in the light
"""),
    ("g-elegy", "elegy", "funerals", "specific", """Upon the hill where willows weep,
We lay you down in gentle sleep,
The echo of your laughter stays,
A whisper in our quiet days.

Our hearts embrace the memories,
Like golden light through autumn trees,
And in the grace of every dawn,
We find the love that carries on.
"""),
]

QUATRAINS = [
    # stanza sizes [4,4,2]
    ("q-a", "One\nTwo\nThree\nFour\n\nFive\nSix\nSeven\nEight\n\nNine\nTen\n"),
    # stanza sizes [3,5]
    ("q-b", "Red\nGreen\nBlue\n\nAlpha\nBeta\nGamma\nDelta\nEpsilon\n"),
    # stanza sizes [4]
    ("q-c", "North\nSouth\nEast\nWest\n"),
]


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as out:
        for row in rows:
            out.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    write_jsonl(ROOT / "human.jsonl", [
        {"id": pid, "text": text, "source": "human", "style": style, "title": title}
        for pid, style, title, text in HUMAN
    ])
    write_jsonl(ROOT / "gpt4.jsonl", [
        {"id": pid, "text": text, "source": "gpt4", "style": style,
         "subject": subject, "template": template}
        for pid, style, subject, template, text in GPT4
    ])
    write_jsonl(ROOT / "quatrains.jsonl", [
        {"id": pid, "text": text, "source": "human", "style": "quatrain"}
        for pid, text in QUATRAINS
    ])
    with open(ROOT / "small.csv", "w", encoding="utf-8", newline="") as out:
        writer = csv.writer(out)
        writer.writerow(["id", "text", "source", "style", "subject", "template", "title"])
        for pid, style, subject, template, text in GPT4[:3]:
            writer.writerow([pid, text, "gpt4", style, subject, template, ""])


if __name__ == "__main__":
    main()
