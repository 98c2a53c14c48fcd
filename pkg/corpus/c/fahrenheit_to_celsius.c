#include <assert.h>

int fahrenheit_to_celsius(int fahrenheit) {
    if (fahrenheit < -459) return -273;
    int shifted = fahrenheit-32;
    int celsius = shifted * 5 / 9;
    return celsius;
}

int main(void) {
    assert(fahrenheit_to_celsius(212) == 100);
    assert(fahrenheit_to_celsius(32) == 0);
    return 0;
}
