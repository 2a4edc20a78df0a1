"""Rule-based classification of errors fixed between wrong and accepted submissions."""
