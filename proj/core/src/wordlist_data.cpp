#include "pwss/features.hpp"

namespace pwss {
namespace detail {

// 1,000 most common passwords bundled as the default dictionary for the
// dictionary-hit feature. Override with a wordlist file where needed.
const char* const kCommonPasswords[1000] = {
    "123456", "password", "12345678", "qwerty", "123456789", "12345", "1234",
    "111111", "1234567", "dragon", "123123", "baseball", "abc123", "football",
    "monkey", "letmein", "shadow", "master", "666666", "qwertyuiop", "123321",
    "mustang", "1234567890", "michael", "654321", "superman", "1qaz2wsx", "7777777",
    "121212", "000000", "qazwsx", "123qwe", "killer", "trustno1", "jordan", "jennifer",
    "zxcvbnm", "asdfgh", "hunter", "buster", "soccer", "harley", "batman", "andrew",
    "tigger", "sunshine", "iloveyou", "2000", "charlie", "robert", "thomas",
    "hockey", "ranger", "daniel", "starwars", "klaster", "112233", "george",
    "computer", "michelle", "jessica", "pepper", "1111", "zxcvbn", "555555",
    "11111111", "131313", "freedom", "777777", "pass", "maggie", "159753", "aaaaaa",
    "ginger", "princess", "joshua", "cheese", "amanda", "summer", "love", "ashley",
    "nicole", "chelsea", "biteme", "matthew", "access", "yankees", "987654321",
    "dallas", "austin", "thunder", "taylor", "matrix", "mobilemail", "mom", "monitor",
    "monitoring", "montana", "moon", "moscow", "passw0rd", "password1", "password123",
    "welcome", "welcome1", "admin", "administrator", "root", "toor", "user",
    "guest", "login", "letmein1", "changeme", "secret", "qwerty123", "qwerty1",
    "q1w2e3r4", "1q2w3e4r", "1q2w3e4r5t", "zaq12wsx", "zaq1zaq1", "asdf1234",
    "asdfghjkl", "poiuyt", "mnbvcxz", "lkjhgf", "0987654321", "987654", "456789",
    "fuckyou", "asshole", "fuckme", "pussy", "porn", "sex", "xxx", "hottie",
    "lovely", "angel", "angels", "devil", "heaven", "silver", "golden", "orange",
    "purple", "yellow", "green", "blue", "red", "black", "white", "pink", "brown",
    "rainbow", "flower", "rose", "tulip", "daisy", "sparky", "corvette", "ferrari",
    "porsche", "camaro", "mercedes", "toyota", "honda", "nissan", "tesla", "eagle",
    "eagles", "falcon", "hawk", "tiger", "lion", "bear", "wolf", "panther", "cobra",
    "snake", "spider", "scorpion", "phoenix", "pegasus", "unicorn", "dolphin",
    "shark", "whale", "turtle", "cowboy", "cowboys", "redskins", "steelers",
    "packers", "lakers", "bulls", "celtics", "knicks", "rangers", "arsenal",
    "chelsea1", "liverpool", "manchester", "barcelona", "realmadrid", "juventus",
    "milan", "inter", "bayern", "cricket", "tennis", "golf", "boxing", "karate",
    "judo", "soccer1", "football1", "baseball1", "basketball", "jesus", "god",
    "bible", "faith", "grace", "church", "angel1", "heaven1", "peace", "hope",
    "buddy", "rocky", "bruno", "max", "sam", "lucky", "princess1", "molly", "bella",
    "daisy1", "smokey", "oscar", "tucker", "coco", "luna", "jake", "bandit",
    "misty", "simba", "patch", "banana", "apple", "cherry", "grape", "lemon",
    "mango", "peach", "melon", "berry", "kiwi", "coffee", "pizza", "burger",
    "cookie", "candy", "sugar", "honey", "pancake", "waffle", "donut", "whiskey",
    "vodka", "tequila", "brandy", "gin", "rum", "beer", "wine", "champagne",
    "cider", "scooter", "yamaha", "suzuki", "kawasaki", "ducati", "harley1",
    "triumph", "vespa", "piaggio", "aprilia", "slipknot", "metallica", "nirvana",
    "queen", "beatles", "eminem", "rihanna", "shakira", "madonna", "elvis", "gandalf",
    "frodo", "hobbit", "legolas", "aragorn", "gollum", "sauron", "mordor", "shire",
    "rivendell", "skywalker", "vader", "yoda", "chewbacca", "kenobi", "sith",
    "jedi", "falcon1", "tatooine", "endor", "pokemon", "pikachu", "charizard",
    "bulbasaur", "squirtle", "eevee", "mewtwo", "snorlax", "gengar", "dragonite",
    "mario", "luigi", "zelda", "link", "kirby", "sonic", "tails", "knuckles",
    "bowser", "peach1", "naruto", "sasuke", "goku", "vegeta", "luffy", "zoro",
    "ichigo", "kakashi", "itachi", "gaara", "harry", "potter", "hermione", "hogwarts",
    "gryffindor", "slytherin", "dumbledore", "voldemort", "quidditch", "muggle",
    "winter", "spring", "autumn", "seasons", "monday", "friday", "sunday", "january",
    "december", "october", "diamond", "emerald", "sapphire", "topaz", "crystal",
    "pearl", "amber", "garnet", "opal", "jade", "london", "paris", "berlin",
    "madrid", "tokyo", "sydney", "chicago", "boston", "houston", "denver", "scotland",
    "ireland", "england", "france", "germany", "canada", "brazil", "mexico",
    "russia", "china", "midnight", "twilight", "eclipse", "shooting", "comet",
    "galaxy", "cosmos", "nebula", "saturn", "jupiter", "happy", "funny", "crazy",
    "silly", "crunchy", "fluffy", "sparkle", "bubbles", "giggles", "smiley",
    "genius", "wizard", "master1", "legend", "hero", "champion", "winner", "victory",
    "power", "energy", "soldier", "captain", "major", "general", "sniper", "hitman",
    "rambo", "rocky1", "terminator", "predator", "hackers", "hacker", "matrix1",
    "neo", "morpheus", "trinity", "cypher", "oracle", "zion", "agent", "office",
    "work", "business", "money", "dollar", "euro", "wealth", "rich", "fortune",
    "empire", "school", "student", "teacher", "college", "campus", "physics",
    "history", "algebra", "science", "biology", "doctor", "nurse", "dentist",
    "lawyer", "police", "fireman", "pilot", "sailor", "farmer", "chef", "music",
    "guitar", "piano", "violin", "drums", "trumpet", "singer", "dancer", "artist",
    "painter", "internet", "website", "email", "galaxy1", "android", "iphone",
    "samsung", "nokia", "motorola", "blackberry", "windows", "linux", "ubuntu",
    "debian", "apple1", "macbook", "laptop", "desktop", "server", "cloud", "keyboard",
    "mouse", "screen", "camera", "printer", "speaker", "headset", "charger",
    "battery", "signal", "super", "duper", "mega", "ultra", "hyper", "turbo",
    "nitro", "speed", "racer", "drift", "secret1", "hidden", "mystery", "shadow1",
    "phantom", "ghost", "spirit", "demon", "zombie", "vampire", "wildcat", "bobcat",
    "puma", "jaguar", "leopard", "cheetah", "lynx", "ocelot", "caracal", "serval",
    "stallion", "mustang1", "bronco", "colt", "filly", "mare", "pony", "gelding",
    "appaloosa", "palomino", "hammer", "wrench", "drill", "screwdriver", "pliers",
    "chisel", "saw", "level", "tape", "measure", "mountain", "river", "ocean",
    "forest", "desert", "valley", "canyon", "glacier", "island", "volcano", "spring1",
    "stream", "creek", "lake", "pond", "lagoon", "bay", "gulf", "reef", "shore",
    "james", "john", "david", "richard", "joseph", "charles", "christopher",
    "anthony", "mark", "donald", "steven", "paul", "kenneth", "kevin", "brian",
    "edward", "ronald", "timothy", "jason", "jeffrey", "ryan", "jacob", "gary",
    "nicholas", "eric", "jonathan", "stephen", "larry", "justin", "scott", "brandon",
    "benjamin", "samuel", "gregory", "frank", "alexander", "raymond", "patrick",
    "jack", "dennis", "jerry", "tyler", "aaron", "jose", "adam", "nathan", "henry",
    "douglas", "zachary", "peter", "kyle", "walter", "ethan", "jeremy", "harold",
    "keith", "christian", "roger", "noah", "gerald", "carl", "terry", "sean",
    "arthur", "lawrence", "dylan", "jesse", "jordan1", "bryan", "billy", "joe",
    "bruce", "gabriel", "logan", "albert", "willie", "alan", "juan", "wayne",
    "elijah", "randy", "roy", "vincent", "ralph", "eugene", "russell", "bobby",
    "mason", "philip", "louis", "mary", "patricia", "linda", "barbara", "elizabeth",
    "susan", "margaret", "dorothy", "lisa", "nancy", "karen", "betty", "helen",
    "sandra", "donna", "carol", "ruth", "sharon", "laura", "sarah", "kimberly",
    "deborah", "rachel", "carolyn", "janet", "catherine", "maria", "heather",
    "diane", "julie", "joyce", "victoria", "kelly", "christina", "joan", "evelyn",
    "lauren", "judith", "megan", "cheryl", "andrea", "hannah1", "jacqueline",
    "martha", "gloria", "teresa", "ann", "sara", "madison", "frances", "kathryn",
    "janice", "jean", "abigail", "alice", "julia", "judy", "sophia", "denise",
    "amber1", "doris", "marilyn", "danielle", "beverly", "isabella", "theresa",
    "diana", "natalie", "brittany", "charlotte", "marie", "kayla", "alexis",
    "lori", "olivia", "emma", "ava", "mia", "emily", "qweqweqwe", "asdasdasd",
    "zxczxczxc", "wasdwasdwasd", "qazqazqaz", "wsxwsxwsx", "edcedcedc", "00000000",
    "222222", "22222222", "333333", "33333333", "444444", "44444444", "55555555",
    "66666666", "77777777", "888888", "88888888", "999999", "99999999", "abcdef",
    "abcd1234", "a1b2c3", "a1b2c3d4", "abc12345", "aaa111", "qwert", "yuiop",
    "asdfg", "hjkl", "zxcvb", "ical", "159357", "951753", "147258", "258456",
    "123654", "321654", "456123", "741852", "852963", "963852", "147852", "951357",
    "456456", "789456", "123789", "321123", "789789", "010203", "102030", "11223344",
    "12121212", "12341234", "123123123", "007007", "1234qwer", "1qazxsw2", "2wsx3edc",
    "qwerasdf", "q1w2e3", "pass123", "pass1234", "root123", "admin123", "test123",
    "temp123", "demo123", "user123", "web123", "abc1234", "1950", "1951", "1952",
    "1953", "1954", "1955", "1956", "1957", "1958", "1959", "1960", "1961", "1962",
    "1963", "1964", "1965", "1966", "1967", "1968", "1969", "1970", "1971", "1972",
    "1973", "1974", "1975", "1976", "1977", "1978", "1979", "1980", "1981", "1982",
    "1983", "1984", "1985", "1986", "1987", "1988", "1989", "1990", "1991", "1992",
    "1993", "1994", "1995", "1996", "1997", "1998", "1999", "2001", "2002", "2003",
    "2004", "2005", "2006", "2007", "2008", "2009", "2010", "2011", "2012", "2013",
    "2014", "2015", "2016", "2017", "2018", "2019", "2020", "2021", "2022", "2023",
    "2024", "2025", "password12", "password7", "password69", "password2020",
    "password99", "password01", "password11", "password21", "monkey1", "monkey12",
    "monkey123", "monkey7", "monkey69", "monkey2020", "monkey99", "monkey01",
    "monkey11", "monkey21", "dragon1", "dragon12", "dragon123", "dragon7", "dragon69",
    "dragon2020", "dragon99", "dragon01", "dragon11", "dragon21", "shadow12",
    "shadow123", "shadow7", "shadow69", "shadow2020", "shadow99", "shadow01",
    "shadow11", "shadow21", "master12", "master123", "master7", "master69", "master2020",
    "master99", "master01", "master11", "master21", "killer1", "killer12", "killer123",
    "killer7", "killer69", "killer2020", "killer99", "killer01", "killer11",
    "killer21", "soccer12", "soccer123", "soccer7", "soccer69", "soccer2020",
    "soccer99", "soccer01", "soccer11", "soccer21", "tiger1", "tiger12", "tiger123",
    "tiger7", "tiger69", "tiger2020", "tiger99", "tiger01", "tiger11", "tiger21",
    "angel12", "angel123", "angel7", "angel69", "angel2020", "angel99", "angel01",
    "angel11", "angel21", "magic1", "magic12", "magic123", "magic7", "magic69",
    "magic2020", "magic99", "magic01", "magic11", "magic21",
};

}  // namespace detail
}  // namespace pwss
