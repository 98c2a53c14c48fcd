public static String capitalizeWords(String sentence, String glue) {
    String[] parts = sentence.split(" ");
    StringBuilder builder = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (parts[i].length() > 0) {
            if (builder.length() > 0) builder.append(glue);
            builder.append(Character.toUpperCase(parts[i].charAt(0)));
            builder.append(parts[i].substring(1));
        }
    }
    String joined = builder.toString();
    return joined;
}
